//! Generic finite-poset toolkit: covers, Möbius function, meet/join, lattice
//! and distributivity predicates, join-irreducibles, lower-set lattices, and
//! DOT export.
//!
//! Reachability is stored as one bitset per node; the Hasse diagram is the
//! transitive reduction.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::{Error, Result};

/// A finite poset over nodes `0..n` with display labels.
pub struct Poset {
    labels: Vec<String>,
    /// `up[x]` = all `y` with `x <= y` (including `x`).
    up: Vec<BitSet>,
    /// `down[x]` = all `y` with `y <= x` (including `x`).
    down: Vec<BitSet>,
    /// Upward Hasse edges per node.
    covers: Vec<Vec<usize>>,
}

impl Poset {
    /// Build from a comparison predicate; `leq` must be a partial order.
    pub fn from_leq<F: FnMut(usize, usize) -> bool>(labels: Vec<String>, mut leq: F) -> Poset {
        let n = labels.len();
        let mut up = vec![BitSet::new(n); n];
        let mut down = vec![BitSet::new(n); n];
        for x in 0..n {
            for y in 0..n {
                if leq(x, y) {
                    up[x].insert(y);
                    down[y].insert(x);
                }
            }
        }
        let mut covers = vec![Vec::new(); n];
        // y covers x iff y is strictly above x and nothing strictly above x
        // sits strictly below y.
        for x in 0..n {
            let mut strict = up[x].clone();
            strict.remove(x);
            let candidates: Vec<usize> = strict.iter().collect();
            for &y in &candidates {
                let mut is_cover = true;
                for &z in &candidates {
                    if z != y && up[z].contains(y) {
                        is_cover = false;
                        break;
                    }
                }
                if is_cover {
                    covers[x].push(y);
                }
            }
        }
        Poset { labels, up, down, covers }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lower_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    pub fn upper_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    /// Upward cover neighbours of `x`.
    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.covers[y].contains(&x)).collect()
    }

    pub fn cover_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).flat_map(move |x| self.covers[x].iter().map(move |&y| (x, y)))
    }

    pub fn minima(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.down[x].count() == 1).collect()
    }

    pub fn maxima(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].count() == 1).collect()
    }

    /// Longest-chain rank of a node above the minima.
    pub fn rank(&self, x: usize) -> usize {
        let mut memo = vec![usize::MAX; self.len()];
        fn go(p: &Poset, x: usize, memo: &mut Vec<usize>) -> usize {
            if memo[x] != usize::MAX {
                return memo[x];
            }
            let r = p
                .lower_covers(x)
                .into_iter()
                .map(|y| go(p, y, memo) + 1)
                .max()
                .unwrap_or(0);
            memo[x] = r;
            r
        }
        go(self, x, &mut memo)
    }

    /// Möbius function, requiring `x <= y`.
    pub fn mobius(&self, x: usize, y: usize) -> Result<i64> {
        if !self.leq(x, y) {
            return Err(Error::Incomparable { order: 'P' });
        }
        let mut interval = self.up[x].clone();
        interval.intersect_with(&self.down[y]);
        let mut mu: HashMap<usize, i64> = HashMap::new();
        // process interval members in order of lower-set size (linear extension)
        let mut members: Vec<usize> = interval.iter().collect();
        members.sort_by_key(|&z| self.down[z].count());
        for z in members {
            if z == x {
                mu.insert(z, 1);
            } else {
                let mut s = 0i64;
                for w in interval.iter() {
                    if w != z && self.leq(w, z) {
                        s += mu[&w];
                    }
                }
                mu.insert(z, -s);
            }
        }
        Ok(mu[&y])
    }

    /// Greatest lower bound of `x` and `y`, when it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let mut common = self.down[x].clone();
        common.intersect_with(&self.down[y]);
        let mut best: Option<usize> = None;
        for z in common.iter() {
            if best.is_none_or(|b| self.down[z].count() > self.down[b].count()) {
                best = Some(z);
            }
        }
        let m = best?;
        common.is_subset(&self.down[m]).then_some(m)
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let mut common = self.up[x].clone();
        common.intersect_with(&self.up[y]);
        let mut best: Option<usize> = None;
        for z in common.iter() {
            if best.is_none_or(|b| self.up[z].count() > self.up[b].count()) {
                best = Some(z);
            }
        }
        let m = best?;
        common.is_subset(&self.up[m]).then_some(m)
    }

    pub fn is_meet_semilattice(&self) -> bool {
        (0..self.len()).all(|x| (x..self.len()).all(|y| self.meet(x, y).is_some()))
    }

    pub fn is_lattice(&self) -> bool {
        self.is_meet_semilattice()
            && (0..self.len()).all(|x| (x..self.len()).all(|y| self.join(x, y).is_some()))
    }

    /// Distributivity via the triple identity `x /\ (y \/ z) = (x /\ y) \/ (x /\ z)`.
    pub fn is_distributive(&self) -> bool {
        if !self.is_lattice() {
            return false;
        }
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet(x, self.join(y, z).unwrap()).unwrap();
                    let rhs = self
                        .join(self.meet(x, y).unwrap(), self.meet(x, z).unwrap())
                        .unwrap();
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Meet-distributivity (Edelman): for every `y`, the interval from the
    /// meet of the lower covers of `y` up to `y` is a Boolean algebra.
    pub fn is_meet_distributive(&self) -> bool {
        if !self.is_meet_semilattice() {
            return false;
        }
        for y in 0..self.len() {
            let covers = self.lower_covers(y);
            if covers.is_empty() {
                continue;
            }
            let mut x = covers[0];
            for &c in &covers[1..] {
                match self.meet(x, c) {
                    Some(m) => x = m,
                    None => return false,
                }
            }
            if !self.interval_is_boolean(x, y) {
                return false;
            }
        }
        true
    }

    /// Is `[x,y]` a Boolean lattice? Checked by mapping subsets of the atoms
    /// through joins and comparing against the whole interval.
    fn interval_is_boolean(&self, x: usize, y: usize) -> bool {
        let mut interval = self.up[x].clone();
        interval.intersect_with(&self.down[y]);
        let atoms: Vec<usize> = self.covers[x]
            .iter()
            .copied()
            .filter(|&a| interval.contains(a))
            .collect();
        if atoms.len() > 20 || interval.count() != 1usize << atoms.len() {
            return false;
        }
        let mut seen = BitSet::new(self.len());
        for mask in 0u32..1 << atoms.len() {
            let mut j = x;
            for (k, &a) in atoms.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    match self.join(j, a) {
                        Some(z) => j = z,
                        None => return false,
                    }
                }
            }
            if !interval.contains(j) || seen.contains(j) {
                return false;
            }
            seen.insert(j);
        }
        true
    }

    /// Elements covering exactly one element.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.lower_covers(x).len() == 1).collect()
    }

    /// The lattice of lower sets, ordered by inclusion.
    pub fn lower_sets(&self) -> Result<Poset> {
        let n = self.len();
        if n > 25 {
            return Err(Error::LowerSetsTooLarge(n));
        }
        let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
        let mut sets: Vec<BitSet> = vec![BitSet::new(n)];
        seen.insert(key_of(&sets[0]), 0);
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            let cur = sets[i].clone();
            for v in 0..n {
                if cur.contains(v) {
                    continue;
                }
                let mut strictly_below = self.down[v].clone();
                strictly_below.remove(v);
                if !strictly_below.is_subset(&cur) {
                    continue;
                }
                let mut next = cur.clone();
                next.insert(v);
                let k = key_of(&next);
                if !seen.contains_key(&k) {
                    seen.insert(k, sets.len());
                    frontier.push(sets.len());
                    sets.push(next);
                }
            }
        }
        // deterministic order: by size, then by contents
        let mut order: Vec<usize> = (0..sets.len()).collect();
        order.sort_by_key(|&i| (sets[i].count(), sets[i].iter().collect::<Vec<_>>()));
        let sets: Vec<BitSet> = order.into_iter().map(|i| sets[i].clone()).collect();
        let labels = sets
            .iter()
            .map(|s| {
                let items: Vec<&str> = s.iter().map(|v| self.labels[v].as_str()).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        Ok(Poset::from_leq(labels, |x, y| sets[x].is_subset(&sets[y])))
    }

    /// DOT rendering: one node per element, one edge per cover. Nodes are
    /// emitted sorted by (rank, label) for stable diffs; `color` labels the
    /// optional edge-color channel.
    pub fn to_dot(&self, name: &str, color: Option<&dyn Fn(usize, usize) -> String>) -> String {
        let mut nodes: Vec<usize> = (0..self.len()).collect();
        nodes.sort_by_key(|&x| (self.rank(x), self.labels[x].clone()));
        let mut out = String::new();
        writeln!(out, "digraph \"{name}\" {{").unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        for x in nodes {
            writeln!(out, "  \"{}\";", self.labels[x]).unwrap();
        }
        let mut edges: Vec<(String, String, Option<String>)> = self
            .cover_edges()
            .map(|(x, y)| {
                (self.labels[x].clone(), self.labels[y].clone(), color.map(|c| c(x, y)))
            })
            .collect();
        edges.sort();
        for (a, b, c) in edges {
            match c {
                Some(c) => writeln!(out, "  \"{a}\" -> \"{b}\" [color={c}];").unwrap(),
                None => writeln!(out, "  \"{a}\" -> \"{b}\";").unwrap(),
            }
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

fn key_of(s: &BitSet) -> Vec<u64> {
    s.iter().map(|x| x as u64).collect()
}

/// A chain 0 < 1 < ... < n-1.
pub fn chain(n: usize) -> Poset {
    Poset::from_leq((0..n).map(|i| i.to_string()).collect(), |x, y| x <= y)
}

/// The Boolean lattice of subsets of `0..k`.
pub fn boolean_lattice(k: usize) -> Poset {
    let n = 1usize << k;
    Poset::from_leq((0..n).map(|m| format!("{m:0k$b}")).collect(), |x, y| x & !y == 0)
}
