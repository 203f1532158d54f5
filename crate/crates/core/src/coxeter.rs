//! Finite Coxeter groups realized by faithful permutation actions.
//!
//! Groups are built by breadth-first enumeration from their generator
//! permutations. Element 0 is the identity and ids are assigned in BFS order
//! by length, ties within a level broken by the lexicographic order of the
//! underlying action arrays, so ids are fully deterministic.
//!
//! Conventions: the index set is `0..rank` (printed 1-based), `A(n)` is the
//! rank-`n` symmetric group on `n+1` letters, `B(n)` acts on `2n` signed
//! points, `D(n)` is the even-signed subgroup, and `I2(p)` acts on the `p`
//! vertices of a regular `p`-gon (`p = 2` falls back to the four-point
//! `A1xA1` action). All arithmetic is on small integer arrays; no
//! algebraic-number arithmetic is involved.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::bitset::{BitRel, BitSet};
use crate::{Error, Result};

/// Default cap on the number of group elements.
pub const DEFAULT_ELEMENT_CAP: u128 = 10_000_000;

/// Bruhat order is cached as a full bitset relation up to this size.
const BRUHAT_TABLE_CAP: usize = 10_000;

/// Identifier of a group element; index into the element table.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct ElementId(pub u32);

impl ElementId {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of the index set `I = 0..rank`, as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GenSet(pub u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(rank: usize) -> GenSet {
        GenSet(((1u64 << rank) - 1) as u32)
    }

    pub fn single(i: usize) -> GenSet {
        GenSet(1 << i)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> GenSet {
        GenSet(it.into_iter().fold(0, |m, i| m | 1 << i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, o: GenSet) -> GenSet {
        GenSet(self.0 | o.0)
    }

    pub fn intersection(self, o: GenSet) -> GenSet {
        GenSet(self.0 & o.0)
    }

    pub fn is_subset(self, o: GenSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn complement(self, rank: usize) -> GenSet {
        GenSet(!self.0 & GenSet::full(rank).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// All subsets of this set, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        let full = self.0;
        let mut cur: Option<u32> = Some(0);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == full { None } else { Some(s.wrapping_sub(full) & full) };
            Some(GenSet(s))
        })
    }

    /// Printed 1-based: `{1,3}`.
    pub fn display(self) -> String {
        let items: Vec<String> = self.iter().map(|i| (i + 1).to_string()).collect();
        format!("{{{}}}", items.join(","))
    }
}

/// Weak or Bruhat order selector.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CoxOrder {
    Left,
    Right,
    Bruhat,
}

/// Left/right selector for the weak orders.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Families of finite Coxeter groups constructible by this crate.
///
/// `A(n)` has rank `n` (the symmetric group on `n+1` letters).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Descriptor {
    A(u16),
    B(u16),
    D(u16),
    I2(u16),
    Product(Vec<Descriptor>),
}

impl Descriptor {
    /// Parse strings like `A3`, `B3`, `I2(7)`, `G2`, `A1xA1`.
    pub fn parse(s: &str) -> Result<Descriptor> {
        let parts: Vec<&str> = s.split('x').collect();
        if parts.len() > 1 {
            let factors = parts
                .iter()
                .map(|p| Descriptor::parse_atom(p.trim()))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Descriptor::Product(factors));
        }
        Descriptor::parse_atom(s.trim())
    }

    fn parse_atom(s: &str) -> Result<Descriptor> {
        let bad = || Error::InvalidDescriptor(s.to_string());
        if s == "G2" {
            return Ok(Descriptor::I2(6));
        }
        if let Some(rest) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let p: u16 = rest.parse().map_err(|_| bad())?;
            return Descriptor::I2(p).validated(s);
        }
        if s.len() < 2 || !s.is_char_boundary(1) {
            return Err(bad());
        }
        let (family, n) = s.split_at(1);
        let n: u16 = n.parse().map_err(|_| bad())?;
        let d = match family {
            "A" => Descriptor::A(n),
            "B" => Descriptor::B(n),
            "D" => Descriptor::D(n),
            _ => return Err(bad()),
        };
        d.validated(s)
    }

    fn validated(self, s: &str) -> Result<Descriptor> {
        let ok = match self {
            Descriptor::A(_) => true,
            Descriptor::B(n) | Descriptor::D(n) => n >= 2,
            Descriptor::I2(p) => p >= 2,
            Descriptor::Product(_) => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidDescriptor(s.to_string()))
        }
    }

    /// Number of simple generators.
    pub fn rank(&self) -> usize {
        match self {
            Descriptor::A(n) | Descriptor::B(n) | Descriptor::D(n) => *n as usize,
            Descriptor::I2(_) => 2,
            Descriptor::Product(fs) => fs.iter().map(|f| f.rank()).sum(),
        }
    }

    /// Group order, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        fn fact(n: u128) -> Option<u128> {
            (1..=n).try_fold(1u128, |a, k| a.checked_mul(k))
        }
        match self {
            Descriptor::A(n) => fact(*n as u128 + 1),
            Descriptor::B(n) => fact(*n as u128)?.checked_mul(1u128.checked_shl(*n as u32)?),
            Descriptor::D(n) => fact(*n as u128)?.checked_mul(1u128.checked_shl(*n as u32 - 1)?),
            Descriptor::I2(p) => Some(2 * *p as u128),
            Descriptor::Product(fs) => fs
                .iter()
                .try_fold(1u128, |a, f| a.checked_mul(f.order()?)),
        }
    }

    /// Size of the acted-on point set.
    pub fn point_count(&self) -> usize {
        match self {
            Descriptor::A(n) => *n as usize + 1,
            Descriptor::B(n) | Descriptor::D(n) => 2 * *n as usize,
            Descriptor::I2(2) => 4,
            Descriptor::I2(p) => *p as usize,
            Descriptor::Product(fs) => fs.iter().map(|f| f.point_count()).sum(),
        }
    }

    /// The generator permutations, one array of length `point_count` each.
    fn generator_arrays(&self) -> Vec<Vec<u16>> {
        let m = self.point_count();
        let id: Vec<u16> = (0..m as u16).collect();
        match self {
            Descriptor::A(n) => (0..*n as usize)
                .map(|i| {
                    let mut a = id.clone();
                    a.swap(i, i + 1);
                    a
                })
                .collect(),
            Descriptor::B(n) => {
                // Points 0..n are +1..+n, points n..2n are -1..-n.
                // s_i (i < n) transposes coordinates i, i+1; s_n flips the
                // sign of the last coordinate (double edge at node n-1 -- n).
                let n = *n as usize;
                let mut gens = Vec::new();
                for i in 1..n {
                    let mut a = id.clone();
                    a.swap(i - 1, i);
                    a.swap(n + i - 1, n + i);
                    gens.push(a);
                }
                let mut sn = id.clone();
                sn.swap(n - 1, 2 * n - 1);
                gens.push(sn);
                gens
            }
            Descriptor::D(n) => {
                // s_i (i < n) as in type B; s_n maps (v_{n-1}, v_n) to
                // (-v_n, -v_{n-1}) (fork at the far end of the diagram).
                let n = *n as usize;
                let mut gens = Vec::new();
                for i in 1..n {
                    let mut a = id.clone();
                    a.swap(i - 1, i);
                    a.swap(n + i - 1, n + i);
                    gens.push(a);
                }
                let mut sn = id.clone();
                sn.swap(n - 2, 2 * n - 1);
                sn.swap(n - 1, 2 * n - 2);
                gens.push(sn);
                gens
            }
            Descriptor::I2(2) => {
                let mut s1 = id.clone();
                s1.swap(0, 1);
                let mut s2 = id;
                s2.swap(2, 3);
                vec![s1, s2]
            }
            Descriptor::I2(p) => {
                let p = *p as usize;
                let s1 = (0..p).map(|v| ((p - v) % p) as u16).collect();
                let s2 = (0..p).map(|v| ((p + 1 - v) % p) as u16).collect();
                vec![s1, s2]
            }
            Descriptor::Product(fs) => {
                let mut gens = Vec::new();
                let mut offset = 0usize;
                for f in fs {
                    let fm = f.point_count();
                    for g in f.generator_arrays() {
                        let mut a: Vec<u16> = (0..m as u16).collect();
                        for (p, &q) in g.iter().enumerate() {
                            a[offset + p] = offset as u16 + q;
                        }
                        gens.push(a);
                    }
                    offset += fm;
                }
                gens
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            Descriptor::A(n) => format!("A{n}"),
            Descriptor::B(n) => format!("B{n}"),
            Descriptor::D(n) => format!("D{n}"),
            Descriptor::I2(p) => format!("I2({p})"),
            Descriptor::Product(fs) => fs.iter().map(|f| f.label()).collect::<Vec<_>>().join("x"),
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A fully enumerated finite Coxeter group.
pub struct CoxeterGroup {
    descriptor: Descriptor,
    n_points: usize,
    rank: usize,
    elements: Vec<Box<[u16]>>,
    lookup: HashMap<Box<[u16]>, u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    length: Vec<u32>,
    inv: Vec<u32>,
    rdesc: Vec<GenSet>,
    ldesc: Vec<GenSet>,
    word: Vec<Vec<u8>>,
    w0: ElementId,
    bruhat_low: OnceLock<BitRel>,
    weak_low: [OnceLock<BitRel>; 2],
}

impl CoxeterGroup {
    /// Enumerate the group of `d` with the default element cap.
    pub fn build(d: &Descriptor) -> Result<CoxeterGroup> {
        CoxeterGroup::build_capped(d, DEFAULT_ELEMENT_CAP)
    }

    pub fn build_capped(d: &Descriptor, cap: u128) -> Result<CoxeterGroup> {
        let order = d.order().ok_or_else(|| Error::SizeCap {
            what: format!("group {d}"),
            size: u128::MAX,
            cap,
        })?;
        if order > cap {
            return Err(Error::SizeCap { what: format!("group {d}"), size: order, cap });
        }
        let n_points = d.point_count();
        let rank = d.rank();
        assert!(rank <= 31, "rank above 31 is unsupported");
        let gens: Vec<Box<[u16]>> = d.generator_arrays().into_iter().map(Vec::into_boxed_slice).collect();

        let id: Box<[u16]> = (0..n_points as u16).collect();
        let mut elements = vec![id.clone()];
        let mut lookup: HashMap<Box<[u16]>, u32> = HashMap::new();
        lookup.insert(id, 0);
        let mut word: Vec<Vec<u8>> = vec![vec![]];
        let mut length = vec![0u32];

        let mut level: Vec<u32> = vec![0];
        let mut depth = 0u32;
        while !level.is_empty() {
            depth += 1;
            // (array, parent, generator), deduplicated keeping the smallest triple.
            let mut next: Vec<(Box<[u16]>, u32, u8)> = Vec::new();
            for &x in &level {
                let xa = &elements[x as usize];
                for (i, g) in gens.iter().enumerate() {
                    let mut a = vec![0u16; n_points];
                    for p in 0..n_points {
                        a[p] = xa[g[p] as usize];
                    }
                    let a = a.into_boxed_slice();
                    if !lookup.contains_key(&a) {
                        next.push((a, x, i as u8));
                    }
                }
            }
            next.sort();
            next.dedup_by(|a, b| a.0 == b.0);
            level = Vec::with_capacity(next.len());
            for (a, parent, g) in next {
                let idx = elements.len() as u32;
                lookup.insert(a.clone(), idx);
                elements.push(a);
                let mut w = word[parent as usize].clone();
                w.push(g);
                word.push(w);
                length.push(depth);
                level.push(idx);
            }
        }
        let n = elements.len();
        assert_eq!(n as u128, order, "enumeration disagrees with the descriptor order");

        let mut right = vec![0u32; n * rank];
        let mut left = vec![0u32; n * rank];
        let mut inv = vec![0u32; n];
        let mut scratch = vec![0u16; n_points];
        for x in 0..n {
            let xa = &elements[x];
            for (i, g) in gens.iter().enumerate() {
                for p in 0..n_points {
                    scratch[p] = xa[g[p] as usize];
                }
                right[x * rank + i] = lookup[scratch.as_slice()];
                for p in 0..n_points {
                    scratch[p] = g[xa[p] as usize];
                }
                left[x * rank + i] = lookup[scratch.as_slice()];
            }
            for p in 0..n_points {
                scratch[xa[p] as usize] = p as u16;
            }
            inv[x] = lookup[scratch.as_slice()];
        }

        let mut rdesc = vec![GenSet::EMPTY; n];
        let mut ldesc = vec![GenSet::EMPTY; n];
        for x in 0..n {
            for i in 0..rank {
                if length[right[x * rank + i] as usize] < length[x] {
                    rdesc[x].insert(i);
                }
                if length[left[x * rank + i] as usize] < length[x] {
                    ldesc[x].insert(i);
                }
            }
        }
        let w0 = ElementId(n as u32 - 1);
        debug_assert_eq!(rdesc[w0.idx()], GenSet::full(rank));

        Ok(CoxeterGroup {
            descriptor: d.clone(),
            n_points,
            rank,
            elements,
            lookup,
            right,
            left,
            length,
            inv,
            rdesc,
            ldesc,
            word,
            w0,
            bruhat_low: OnceLock::new(),
            weak_low: [OnceLock::new(), OnceLock::new()],
        })
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn point_count(&self) -> usize {
        self.n_points
    }

    pub fn identity(&self) -> ElementId {
        ElementId(0)
    }

    pub fn w0(&self) -> ElementId {
        self.w0
    }

    pub fn all(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order() as u32).map(ElementId)
    }

    pub fn full_index_set(&self) -> GenSet {
        GenSet::full(self.rank)
    }

    pub fn action(&self, w: ElementId) -> &[u16] {
        &self.elements[w.idx()]
    }

    pub fn length(&self, w: ElementId) -> usize {
        self.length[w.idx()] as usize
    }

    /// A canonical reduced word for `w` (0-based generator indices).
    pub fn reduced_word(&self, w: ElementId) -> &[u8] {
        &self.word[w.idx()]
    }

    /// Letters occurring in the reduced words of `w` (independent of the word).
    pub fn support(&self, w: ElementId) -> GenSet {
        GenSet::from_iter(self.word[w.idx()].iter().map(|&i| i as usize))
    }

    /// `w` lies in the parabolic subgroup generated by `k`.
    pub fn in_parabolic(&self, w: ElementId, k: GenSet) -> bool {
        self.support(w).is_subset(k)
    }

    pub fn generator(&self, i: usize) -> ElementId {
        ElementId(self.right[i])
    }

    /// `w * s_i`.
    #[inline]
    pub fn right_mul(&self, w: ElementId, i: usize) -> ElementId {
        ElementId(self.right[w.idx() * self.rank + i])
    }

    /// `s_i * w`.
    #[inline]
    pub fn left_mul(&self, w: ElementId, i: usize) -> ElementId {
        ElementId(self.left[w.idx() * self.rank + i])
    }

    /// Group product `a * b`, composing the one-line actions so that
    /// `product(w, s_i) = right_mul(w, i)`.
    pub fn product(&self, a: ElementId, b: ElementId) -> ElementId {
        let aa = &self.elements[a.idx()];
        let ba = &self.elements[b.idx()];
        let mut c = vec![0u16; self.n_points];
        for p in 0..self.n_points {
            c[p] = aa[ba[p] as usize];
        }
        ElementId(self.lookup[c.as_slice()])
    }

    pub fn inverse(&self, w: ElementId) -> ElementId {
        ElementId(self.inv[w.idx()])
    }

    /// Product of the generators along `word`.
    pub fn element_of_word(&self, word: &[u8]) -> ElementId {
        word.iter().fold(self.identity(), |w, &i| self.right_mul(w, i as usize))
    }

    pub fn right_descents(&self, w: ElementId) -> GenSet {
        self.rdesc[w.idx()]
    }

    pub fn left_descents(&self, w: ElementId) -> GenSet {
        self.ldesc[w.idx()]
    }

    /// `u <=_R w`: some reduced word of `w` extends one of `u` on the right.
    pub fn le_r(&self, u: ElementId, w: ElementId) -> bool {
        let q = self.product(self.inverse(u), w);
        self.length(u) + self.length(q) == self.length(w)
    }

    /// `u <=_L w`.
    pub fn le_l(&self, u: ElementId, w: ElementId) -> bool {
        let q = self.product(w, self.inverse(u));
        self.length(u) + self.length(q) == self.length(w)
    }

    /// `u <=_LR w`: there is `v` with `u <=_L v <=_R w`.
    pub fn le_lr(&self, u: ElementId, w: ElementId) -> bool {
        self.lower_weak(Side::Right).row(w.idx()).iter().any(|v| self.le_l(u, ElementId(v as u32)))
    }

    /// Bruhat comparison via the lifting-property recursion.
    pub fn le_b(&self, u: ElementId, w: ElementId) -> bool {
        if self.order() <= BRUHAT_TABLE_CAP {
            return self.lower_bruhat().get(w.idx(), u.idx());
        }
        self.le_b_recursive(u, w)
    }

    fn le_b_recursive(&self, mut u: ElementId, mut w: ElementId) -> bool {
        loop {
            if u == w {
                return true;
            }
            if self.length(u) >= self.length(w) {
                return false;
            }
            // Any right descent of w works; descend on length.
            let i = self.rdesc[w.idx()].iter().next().expect("non-identity has a descent");
            if self.rdesc[u.idx()].contains(i) {
                u = self.right_mul(u, i);
            }
            w = self.right_mul(w, i);
        }
    }

    /// Lower-set rows of Bruhat order: `row(w) = {u : u <=_B w}`.
    pub fn lower_bruhat(&self) -> &BitRel {
        self.bruhat_low.get_or_init(|| {
            let n = self.order();
            let mut rel = BitRel::new(n);
            // Elements are sorted by length, so children come first.
            for w in 0..n {
                if w == 0 {
                    rel.set(0, 0);
                    continue;
                }
                let i = self.rdesc[w].iter().next().unwrap();
                let v = self.right[w * self.rank + i] as usize;
                let mut row = BitSet::new(n);
                for u in 0..n {
                    let up = if self.rdesc[u].contains(i) { self.right[u * self.rank + i] as usize } else { u };
                    if rel.get(v, up) {
                        row.insert(u);
                    }
                }
                row.insert(w);
                *rel.row_mut(w) = row;
            }
            rel
        })
    }

    /// Lower-set rows of a weak order: `row(w) = {u : u <=_side w}`.
    pub fn lower_weak(&self, side: Side) -> &BitRel {
        let slot = match side {
            Side::Left => &self.weak_low[0],
            Side::Right => &self.weak_low[1],
        };
        slot.get_or_init(|| {
            let n = self.order();
            let mut rel = BitRel::new(n);
            for w in 0..n {
                let desc = match side {
                    Side::Left => self.ldesc[w],
                    Side::Right => self.rdesc[w],
                };
                let mut row = BitSet::new(n);
                for i in desc.iter() {
                    let v = match side {
                        Side::Left => self.left[w * self.rank + i] as usize,
                        Side::Right => self.right[w * self.rank + i] as usize,
                    };
                    row.union_with(rel.row(v));
                }
                row.insert(w);
                *rel.row_mut(w) = row;
            }
            rel
        })
    }

    fn le(&self, u: ElementId, w: ElementId, order: CoxOrder) -> bool {
        match order {
            CoxOrder::Left => self.le_l(u, w),
            CoxOrder::Right => self.le_r(u, w),
            CoxOrder::Bruhat => self.le_b(u, w),
        }
    }

    /// Minimal-length representative of the coset `w W_K`, and the
    /// complementary factor: `w = w^K * kw` with `kw` in `W_K`.
    pub fn min_coset_rep_right(&self, w: ElementId, k: GenSet) -> (ElementId, ElementId) {
        let mut v = w;
        loop {
            let d = self.rdesc[v.idx()].intersection(k);
            match d.iter().next() {
                Some(i) => v = self.right_mul(v, i),
                None => break,
            }
        }
        (v, self.product(self.inverse(v), w))
    }

    /// Minimal-length representative of the coset `W_J w`, and the
    /// complementary factor: `w = wj * jw` with `wj` in `W_J`.
    pub fn min_coset_rep_left(&self, w: ElementId, j: GenSet) -> (ElementId, ElementId) {
        let mut v = w;
        loop {
            let d = self.ldesc[v.idx()].intersection(j);
            match d.iter().next() {
                Some(i) => v = self.left_mul(v, i),
                None => break,
            }
        }
        (v, self.product(w, self.inverse(v)))
    }

    /// All `z` with `a <= z <= b` in the chosen order; empty if incomparable.
    pub fn interval(&self, a: ElementId, b: ElementId, order: CoxOrder) -> Vec<ElementId> {
        self.all()
            .filter(|&z| self.le(a, z, order) && self.le(z, b, order))
            .collect()
    }

    /// Type of a weak-order interval: `b a^-1` (left) or `a^-1 b` (right).
    pub fn interval_type(&self, a: ElementId, b: ElementId, side: Side) -> Result<ElementId> {
        match side {
            Side::Left => {
                if !self.le_l(a, b) {
                    return Err(Error::Incomparable { order: 'L' });
                }
                Ok(self.product(b, self.inverse(a)))
            }
            Side::Right => {
                if !self.le_r(a, b) {
                    return Err(Error::Incomparable { order: 'R' });
                }
                Ok(self.product(self.inverse(a), b))
            }
        }
    }

    /// Meet in the weak-order lattice: maximum of the intersection of lower sets.
    pub fn weak_meet(&self, u: ElementId, v: ElementId, side: Side) -> ElementId {
        let low = self.lower_weak(side);
        let mut inter = low.row(u.idx()).clone();
        inter.intersect_with(low.row(v.idx()));
        let m = inter
            .iter()
            .max_by_key(|&z| self.length[z])
            .expect("lower sets always share the identity");
        debug_assert!(inter.iter().all(|z| low.row(m).contains(z)));
        ElementId(m as u32)
    }

    /// Join in the weak-order lattice: minimum of the intersection of upper sets.
    pub fn weak_join(&self, u: ElementId, v: ElementId, side: Side) -> ElementId {
        let low = self.lower_weak(side);
        let mut best: Option<usize> = None;
        for z in 0..self.order() {
            if low.row(z).contains(u.idx()) && low.row(z).contains(v.idx()) {
                if best.is_none_or(|b| self.length[z] < self.length[b]) {
                    best = Some(z);
                }
            }
        }
        let m = best.expect("w0 is an upper bound");
        ElementId(m as u32)
    }

    /// One-line notation for type `A(n)` (points as digits `1..n+1`);
    /// otherwise the canonical reduced word, or `e` for the identity.
    pub fn label(&self, w: ElementId) -> String {
        if matches!(self.descriptor, Descriptor::A(n) if n <= 8) {
            self.elements[w.idx()].iter().map(|p| (p + 1).to_string()).collect()
        } else if w == self.identity() {
            "e".to_string()
        } else {
            self.word[w.idx()].iter().map(|i| (i + 1).to_string()).collect()
        }
    }

    /// Find the element whose action array is `a`, if any.
    pub fn element_by_action(&self, a: &[u16]) -> Option<ElementId> {
        self.lookup.get(a).map(|&i| ElementId(i))
    }

    /// For type A: the element with the given one-line word (values `1..n+1`).
    pub fn element_by_one_line(&self, one_line: &[u16]) -> Option<ElementId> {
        let a: Box<[u16]> = one_line.iter().map(|&v| v - 1).collect();
        self.lookup.get(&a).map(|&i| ElementId(i))
    }

    /// Element table as JSON.
    pub fn dump_json(&self) -> serde_json::Value {
        serde_json::json!({
            "descriptor": self.descriptor.label(),
            "points": self.n_points,
            "order": self.order(),
            "elements": self.all().map(|w| serde_json::json!({
                "id": w.0,
                "label": self.label(w),
                "action": self.action(w),
                "length": self.length(w),
                "word": self.reduced_word(w).iter().map(|i| i + 1).collect::<Vec<u8>>(),
            })).collect::<Vec<_>>(),
        })
    }
}
