//! Decomposition matrices, restricted characters, and the summary statistics
//! table (group order, Borel and monoid sizes, simple-module dimensions).

use std::collections::BTreeMap;

use crate::blocks::{cutting_poset, CuttingPoset};
use crate::coxeter::{CoxOrder, CoxeterGroup, Descriptor, ElementId, GenSet};
use crate::fmonoid::bihecke;
use crate::linalg::QPoly;
use crate::reptheory::modules::{dim_simple, simple_basis};
use crate::Result;

/// Row/column order for emitted matrices: one-line lexicographic in type A
/// (matching the published tables), BFS id order otherwise.
pub fn table_order(g: &CoxeterGroup) -> Vec<ElementId> {
    let mut order: Vec<ElementId> = g.all().collect();
    if matches!(g.descriptor(), Descriptor::A(_)) {
        order.sort_by_key(|&w| g.label(w));
    }
    order
}

/// A square matrix of q-polynomials with display labels and margins.
pub struct GradedMatrix {
    pub labels: Vec<String>,
    /// Entries in label order.
    pub entries: Vec<Vec<QPoly>>,
    /// Dimensions of the simple modules, in label order (`None`: all 1).
    pub simple_dims: Option<Vec<i64>>,
}

impl GradedMatrix {
    /// Reorder a `|W| x |W|` id-indexed matrix into table order.
    pub fn from_id_indexed(
        g: &CoxeterGroup,
        c: &[Vec<QPoly>],
        simple_dims_by_id: Option<&[i64]>,
    ) -> GradedMatrix {
        let order = table_order(g);
        let labels = order.iter().map(|&w| g.label(w)).collect();
        let entries = order
            .iter()
            .map(|&u| order.iter().map(|&v| c[u.idx()][v.idx()].clone()).collect())
            .collect();
        let simple_dims =
            simple_dims_by_id.map(|d| order.iter().map(|&w| d[w.idx()]).collect());
        GradedMatrix { labels, entries, simple_dims }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    fn dims(&self) -> Vec<i64> {
        self.simple_dims.clone().unwrap_or_else(|| vec![1; self.n()])
    }

    /// Projective dimensions (row margin): `sum_v c[u][v](1) dim S_v`.
    pub fn projective_row_margin(&self) -> Vec<i64> {
        let d = self.dims();
        (0..self.n())
            .map(|u| (0..self.n()).map(|v| self.entries[u][v].eval_at_one() * d[v]).sum())
            .collect()
    }

    /// Left projective dimensions (column margin): `sum_u c[u][v](1) dim S_u`.
    pub fn projective_col_margin(&self) -> Vec<i64> {
        let d = self.dims();
        (0..self.n())
            .map(|v| (0..self.n()).map(|u| self.entries[u][v].eval_at_one() * d[u]).sum())
            .collect()
    }
}

/// The decomposition matrix of the biHecke monoid over its `w0`-Borel:
/// row `w` has 1s exactly on the simple basis of `S_w`.
pub fn decomposition_matrix(g: &CoxeterGroup, cp: &CuttingPoset) -> Vec<Vec<i64>> {
    let n = g.order();
    let mut d = vec![vec![0i64; n]; n];
    for w in g.all() {
        for u in simple_basis(g, cp, w) {
            d[w.idx()][u.idx()] = 1;
        }
    }
    d
}

/// Character of the translation module `T_w` restricted to the `w0`-Borel:
/// multiplicity one for each `u` in `[1,w]_R`.
pub fn character_t_restricted(g: &CoxeterGroup, w: ElementId) -> BTreeMap<ElementId, i64> {
    g.interval(g.identity(), w, CoxOrder::Right)
        .into_iter()
        .map(|u| (u, 1))
        .collect()
}

/// Restriction of the Borel simple `S^{w0}_w` to the 0-Hecke monoid: the
/// descent set indexing the corresponding `H_0` simple.
pub fn h0_restriction(g: &CoxeterGroup, w: ElementId) -> GenSet {
    g.right_descents(w)
}

/// One row of the statistics table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub label: String,
    pub group_order: usize,
    pub borel_order: usize,
    pub monoid_order: usize,
    /// (dimension, multiplicity) of the simple modules, ascending.
    pub dim_multiset: Vec<(usize, usize)>,
    pub dim_sum: usize,
}

impl Table1Row {
    /// `A3 24 71 477 1^8 2^4 3^4 4^6 5^2 62`
    pub fn render(&self) -> String {
        let dims: Vec<String> =
            self.dim_multiset.iter().map(|(d, m)| format!("{d}^{m}")).collect();
        format!(
            "{} {} {} {} {} {}",
            self.label,
            self.group_order,
            self.borel_order,
            self.monoid_order,
            dims.join(" "),
            self.dim_sum
        )
    }
}

/// Assemble the statistics row for a group: `|W|`, `|M_w0|`, `|M|`, the
/// multiset of simple-module dimensions, and their sum.
pub fn table1_row(g: &CoxeterGroup, cap: u128) -> Result<Table1Row> {
    let m = bihecke(g, cap)?;
    let borel_order =
        (0..m.len() as u32).filter(|&x| m.element(x).apply(g.w0()) == g.w0()).count();
    let cp = cutting_poset(g);
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    let mut sum = 0;
    for w in g.all() {
        let d = dim_simple(g, &cp, w);
        *mult.entry(d).or_insert(0) += 1;
        sum += d;
    }
    Ok(Table1Row {
        label: g.descriptor().label(),
        group_order: g.order(),
        borel_order,
        monoid_order: m.len(),
        dim_multiset: mult.into_iter().collect(),
        dim_sum: sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Descriptor;

    fn group(s: &str) -> CoxeterGroup {
        CoxeterGroup::build(&Descriptor::parse(s).unwrap()).unwrap()
    }

    fn by_word(g: &CoxeterGroup, s: &str) -> ElementId {
        let word: Vec<u16> = s.bytes().map(|b| (b - b'0') as u16).collect();
        g.element_by_one_line(&word).unwrap()
    }

    #[test]
    fn decomposition_rows() {
        let g = group("A3");
        let cp = cutting_poset(&g);
        let d = decomposition_matrix(&g, &cp);
        let row = &d[by_word(&g, "4312").idx()];
        let support: Vec<String> = g
            .all()
            .filter(|w| row[w.idx()] == 1)
            .map(|w| g.label(w))
            .collect();
        assert_eq!(support, vec!["1432", "4132", "4312"]);
        // lower uni-triangular for right order, 0-1 entries, row sums = dims
        for w in g.all() {
            assert_eq!(d[w.idx()][w.idx()], 1);
            for u in g.all() {
                assert!(d[w.idx()][u.idx()] == 0 || d[w.idx()][u.idx()] == 1);
                if d[w.idx()][u.idx()] == 1 {
                    assert!(g.le_r(u, w));
                }
            }
            let sum: i64 = d[w.idx()].iter().sum();
            assert_eq!(sum, dim_simple(&g, &cp, w) as i64);
        }
    }

    #[test]
    fn decomposition_a2_golden() {
        let g = group("A2");
        let cp = cutting_poset(&g);
        let d = decomposition_matrix(&g, &cp);
        let row231 = &d[by_word(&g, "231").idx()];
        let support: Vec<String> =
            g.all().filter(|w| row231[w.idx()] == 1).map(|w| g.label(w)).collect();
        assert_eq!(support, vec!["213", "231"]);
        let row312 = &d[by_word(&g, "312").idx()];
        let support: Vec<String> =
            g.all().filter(|w| row312[w.idx()] == 1).map(|w| g.label(w)).collect();
        assert_eq!(support, vec!["132", "312"]);
    }

    #[test]
    fn characters_of_translation_modules() {
        let g = group("A3");
        assert_eq!(character_t_restricted(&g, g.identity()).len(), 1);
        assert_eq!(character_t_restricted(&g, by_word(&g, "4312")).len(), 12);
        // the regular representation filters through the translation modules:
        // sum over f in M_w0 of |[1, 1.f]_R| equals |M|
        let m = bihecke(&g, 1 << 20).unwrap();
        let total: usize = (0..m.len() as u32)
            .filter(|&x| m.element(x).apply(g.w0()) == g.w0())
            .map(|x| character_t_restricted(&g, m.element(x).apply(g.identity())).len())
            .sum();
        assert_eq!(total, m.len());
    }

    #[test]
    fn h0_restriction_is_descent_set() {
        let g = group("A3");
        assert_eq!(h0_restriction(&g, g.identity()), GenSet::EMPTY);
        assert_eq!(h0_restriction(&g, g.w0()), g.full_index_set());
        assert_eq!(h0_restriction(&g, by_word(&g, "4312")), GenSet::from_iter([0, 1]));
    }

    #[test]
    fn table1_small_rows() {
        let rows = [
            ("A1", "A1 2 2 3 1^2 2"),
            ("A2", "A2 6 8 23 1^4 2^2 8"),
            ("A3", "A3 24 71 477 1^8 2^4 3^4 4^6 5^2 62"),
            ("B2", "B2 8 14 49 1^4 2^2 3^2 14"),
            ("A1xA1", "A1xA1 4 4 9 1^4 4"),
        ];
        for (s, expect) in rows {
            let g = group(s);
            let row = table1_row(&g, 1 << 24).unwrap();
            assert_eq!(row.render(), expect, "{s}");
        }
    }

    #[test]
    fn table_order_is_lexicographic_in_type_a() {
        let g = group("A2");
        let labels: Vec<String> = table_order(&g).iter().map(|&w| g.label(w)).collect();
        assert_eq!(labels, vec!["123", "132", "213", "231", "312", "321"]);
    }
}
