//! Translation modules `T_w`, their left-antisymmetric submodules `P_J`,
//! simple-module dimensions, and the w-biHecke algebra dimension.

use num_rational::BigRational;

use crate::blocks::{jblock, reduced_blocks, CuttingPoset};
use crate::coxeter::{CoxOrder, CoxeterGroup, ElementId, GenSet};
use crate::fmonoid::{TransformationMonoid, WFunction};
use crate::linalg::{rank, Rationals, Ring, Subspace};
use crate::{Error, Result};

/// A generator letter acting on a translation module.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum PiGen {
    Pi(usize),
    OPi(usize),
}

/// The combinatorial module with basis `[1,w]_R`: `pi_i` fixes descents,
/// moves along the interval, and annihilates at the border; `opi_i` dually.
pub struct TranslationModule {
    pub w: ElementId,
    /// Basis elements, sorted by element id.
    pub basis: Vec<ElementId>,
    pos: Vec<i32>,
}

/// Build `T_w`.
pub fn translation_module(g: &CoxeterGroup, w: ElementId) -> TranslationModule {
    let basis = g.interval(g.identity(), w, CoxOrder::Right);
    let mut pos = vec![-1; g.order()];
    for (i, &u) in basis.iter().enumerate() {
        pos[u.idx()] = i as i32;
    }
    TranslationModule { w, basis, pos }
}

impl TranslationModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, u: ElementId) -> Option<usize> {
        (self.pos[u.idx()] >= 0).then_some(self.pos[u.idx()] as usize)
    }

    /// Image of the basis element at `upos` under `pi_i`/`opi_i`
    /// (`None` = annihilated).
    pub fn act(&self, g: &CoxeterGroup, upos: usize, gen: PiGen) -> Option<usize> {
        let u = self.basis[upos];
        match gen {
            PiGen::Pi(i) => {
                if g.right_descents(u).contains(i) {
                    Some(upos)
                } else {
                    self.position(g.right_mul(u, i))
                }
            }
            PiGen::OPi(i) => {
                let usi = g.right_mul(u, i);
                if g.right_descents(u).contains(i) {
                    Some(self.pos[usi.idx()] as usize)
                } else {
                    // survives (fixed) only while u s_i stays in the interval
                    self.position(usi).map(|_| upos)
                }
            }
        }
    }

    /// Image under `s_i = pi_i + opi_i - 1`: `u s_i` when it stays in the
    /// interval, `-u` otherwise.
    pub fn act_reflection(&self, g: &CoxeterGroup, upos: usize, i: usize) -> (usize, i64) {
        let u = self.basis[upos];
        match self.position(g.right_mul(u, i)) {
            Some(v) => (v, 1),
            None => (upos, -1),
        }
    }

    /// Left reflection operator: `s_i u` when it stays, `-u` otherwise.
    pub fn act_left_reflection(&self, g: &CoxeterGroup, upos: usize, i: usize) -> (usize, i64) {
        let u = self.basis[upos];
        match self.position(g.left_mul(u, i)) {
            Some(v) => (v, 1),
            None => (upos, -1),
        }
    }

    /// Apply a generator to a coefficient vector over the basis.
    pub fn apply_gen<R: Ring>(&self, ring: R, g: &CoxeterGroup, v: &[R::Elem], gen: PiGen) -> Vec<R::Elem> {
        let mut out = vec![ring.zero(); self.dim()];
        for (upos, c) in v.iter().enumerate() {
            if ring.is_zero(c) {
                continue;
            }
            if let Some(t) = self.act(g, upos, gen) {
                out[t] = ring.add(&out[t], c);
            }
        }
        out
    }

    /// Apply `pi_x` (a product of `pi_i` along a reduced word of `x`).
    pub fn apply_pi_of<R: Ring>(&self, ring: R, g: &CoxeterGroup, v: &[R::Elem], x: ElementId) -> Vec<R::Elem> {
        let mut v = v.to_vec();
        for &i in g.reduced_word(x) {
            v = self.apply_gen(ring, g, &v, PiGen::Pi(i as usize));
        }
        v
    }

    /// Apply a biHecke monoid element through a word in the `bihecke`
    /// generator order (`pi_1..pi_n, opi_1..opi_n`).
    pub fn apply_monoid_word<R: Ring>(
        &self,
        ring: R,
        g: &CoxeterGroup,
        v: &[R::Elem],
        word: &[u8],
    ) -> Vec<R::Elem> {
        let n = g.rank();
        let mut v = v.to_vec();
        for &gi in word {
            let gen = if (gi as usize) < n {
                PiGen::Pi(gi as usize)
            } else {
                PiGen::OPi(gi as usize - n)
            };
            v = self.apply_gen(ring, g, &v, gen);
        }
        v
    }

    /// The trace of a monoid element given by `word` on `T_w`; every surviving
    /// basis element contributes `+1`.
    pub fn word_trace(&self, g: &CoxeterGroup, word: &[u8]) -> i64 {
        let n = g.rank();
        let mut tr = 0;
        for start in 0..self.dim() {
            let mut cur = Some(start);
            for &gi in word {
                match cur {
                    None => break,
                    Some(p) => {
                        let gen = if (gi as usize) < n {
                            PiGen::Pi(gi as usize)
                        } else {
                            PiGen::OPi(gi as usize - n)
                        };
                        cur = self.act(g, p, gen);
                    }
                }
            }
            if cur == Some(start) {
                tr += 1;
            }
        }
        tr
    }

    /// One exact matrix per generator (`pi_1..pi_n, opi_1..opi_n`), rows
    /// indexed by source basis element.
    pub fn matrix_rep(&self, g: &CoxeterGroup) -> MatrixRep {
        let d = self.dim();
        let mut gens = Vec::new();
        for (name, make) in [("pi", false), ("opi", true)] {
            for i in 0..g.rank() {
                let gen = if make { PiGen::OPi(i) } else { PiGen::Pi(i) };
                let mut m = vec![vec![BigRational::from_integer(0.into()); d]; d];
                for (upos, row) in m.iter_mut().enumerate() {
                    if let Some(t) = self.act(g, upos, gen) {
                        row[t] = BigRational::from_integer(1.into());
                    }
                }
                gens.push((format!("{name}{}", i + 1), m));
            }
        }
        MatrixRep {
            dim: d,
            basis_labels: self.basis.iter().map(|&u| g.label(u)).collect(),
            gens,
        }
    }
}

/// A module presented by one exact matrix per generator.
pub struct MatrixRep {
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub gens: Vec<(String, Vec<Vec<BigRational>>)>,
}

/// The alternating-sum vector `v_J^w` over `[1, w_J]_R`, as coefficients on
/// the `T_w` basis.
pub fn antisym_vector(g: &CoxeterGroup, t: &TranslationModule, j: GenSet) -> Vec<i64> {
    let (wj, _) = g.min_coset_rep_left(t.w, j);
    let w_j = g.product(t.w, g.inverse(wj));
    debug_assert_eq!(g.product(w_j, wj), t.w);
    let mut v = vec![0i64; t.dim()];
    for (p, &u) in t.basis.iter().enumerate() {
        if g.le_r(u, w_j) {
            let sign = (g.length(w_j) as i64 - g.length(u) as i64) % 2;
            v[p] = if sign == 0 { 1 } else { -1 };
        }
    }
    v
}

/// Basis of the left-antisymmetric submodule `P_J` of `T_w`, when it is a
/// submodule (iff `^J w` is a cutting point of `w`); `None` otherwise.
pub fn antisym_submodule(g: &CoxeterGroup, w: ElementId, j: GenSet) -> Option<Vec<Vec<i64>>> {
    let t = translation_module(g, w);
    let basis = antisym_basis(g, &t, j);
    // verify stability under every generator
    let ring = Rationals;
    let mut span = Subspace::new(ring, t.dim());
    for v in &basis {
        span.insert(v.iter().map(|&c| ring.from_i64(c)).collect());
    }
    for v in &basis {
        let vq: Vec<BigRational> = v.iter().map(|&c| ring.from_i64(c)).collect();
        for i in 0..g.rank() {
            for gen in [PiGen::Pi(i), PiGen::OPi(i)] {
                let img = t.apply_gen(ring, g, &vq, gen);
                if !span.contains(&img) {
                    return None;
                }
            }
        }
    }
    Some(basis)
}

/// The candidate basis `{v_J^w . pi_x : x in [1, ^Jw]_R}`.
pub fn antisym_basis(g: &CoxeterGroup, t: &TranslationModule, j: GenSet) -> Vec<Vec<i64>> {
    let ring = Rationals;
    let (jw, _) = g.min_coset_rep_left(t.w, j);
    let v0 = antisym_vector(g, t, j);
    let v0q: Vec<BigRational> = v0.iter().map(|&c| ring.from_i64(c)).collect();
    g.interval(g.identity(), jw, CoxOrder::Right)
        .into_iter()
        .map(|x| {
            t.apply_pi_of(ring, g, &v0q, x)
                .into_iter()
                .map(|c| ring.to_small_integer(&c).expect("entries stay 0/±1"))
                .collect()
        })
        .collect()
}

/// Basis of the simple module `S_w`: the interval members surviving the
/// cutting-poset inclusion-exclusion.
pub fn simple_basis(g: &CoxeterGroup, cp: &CuttingPoset, w: ElementId) -> Vec<ElementId> {
    let low = g.lower_weak(crate::coxeter::Side::Right);
    let mut keep = low.row(w.idx()).clone();
    for v in cp.lower_covers(w) {
        keep.difference_with(low.row(v.idx()));
    }
    keep.iter().map(|x| ElementId(x as u32)).collect()
}

/// `dim S_w` by set difference.
pub fn dim_simple(g: &CoxeterGroup, cp: &CuttingPoset, w: ElementId) -> usize {
    simple_basis(g, cp, w).len()
}

/// Independent linear oracle: `dim T_w` minus the rank of the span of the
/// embedded submodules `P_{J_v}` over the lower covers `v` of `w`.
pub fn dim_simple_linear(g: &CoxeterGroup, cp: &CuttingPoset, w: ElementId) -> Result<usize> {
    let t = translation_module(g, w);
    if t.dim() > 2000 {
        return Err(Error::LinearCap { dim: t.dim(), cap: 2000 });
    }
    let ring = Rationals;
    let mut span = Subspace::new(ring, t.dim());
    for v in cp.lower_covers(w) {
        // the left block indexing the cutting point v of w
        let b = reduced_blocks(g, w)
            .into_iter()
            .find(|b| b.cutting_point == v)
            .expect("lower cover is a cutting point");
        for row in antisym_basis(g, &t, b.j) {
            span.insert(row.into_iter().map(|c| ring.from_i64(c)).collect());
        }
    }
    Ok(t.dim() - span.dim())
}

/// Combinatorial dimension of the w-biHecke algebra: pairs with nested
/// w-nondescent sets.
pub fn whbihecke_dim(g: &CoxeterGroup, w: ElementId) -> usize {
    let interval = g.interval(g.identity(), w, CoxOrder::Right);
    let jb: Vec<GenSet> = interval.iter().map(|&u| jblock(g, w, u).unwrap()).collect();
    let mut count = 0;
    for a in &jb {
        for b in &jb {
            if a.is_subset(*b) {
                count += 1;
            }
        }
    }
    count
}

/// Oracle: dimension of the span of all monoid operators on `T_w`, obtained
/// by closing the generator actions (with an adjoined zero point) and taking
/// the rank of the flattened 0/1 action matrices.
pub fn whbihecke_dim_linear(g: &CoxeterGroup, w: ElementId) -> Result<usize> {
    let t = translation_module(g, w);
    let d = t.dim();
    if d * d > 4096 {
        return Err(Error::LinearCap { dim: d, cap: 64 });
    }
    // functions on basis ∪ {zero}, zero absorbing at index d
    let mut gens = Vec::new();
    for i in 0..g.rank() {
        for (name, gen) in [("pi", PiGen::Pi(i)), ("opi", PiGen::OPi(i))] {
            let arr: Box<[u16]> = (0..=d)
                .map(|p| {
                    if p == d {
                        d as u16
                    } else {
                        t.act(g, p, gen).map_or(d as u16, |q| q as u16)
                    }
                })
                .collect();
            gens.push((format!("{name}{}", i + 1), WFunction(arr)));
        }
    }
    let closure = TransformationMonoid::closure(gens, 1 << 24)?;
    let ring = Rationals;
    let rows: Vec<Vec<BigRational>> = (0..closure.len() as u32)
        .map(|x| {
            let f = closure.element(x);
            let mut m = vec![ring.zero(); d * d];
            for p in 0..d {
                let q = f.0[p] as usize;
                if q < d {
                    m[p * d + q] = ring.one();
                }
            }
            m
        })
        .collect();
    Ok(rank(ring, &rows))
}
