//! lfix/rfix combinatorics, Cartan counts, the quiver, and the minimal
//! generating set of the Borel submonoid fixing the identity (results for the
//! submonoid fixing `w0` are reached through the bar involution).

use crate::coxeter::{CoxeterGroup, ElementId, Side};
use crate::fmonoid::{bar, e_w, BorelAnchor, MIdx, TransformationMonoid, WFunction};
use crate::{Error, Result};

/// `lfix(x)`: the left-order minimum of `{u : e_u x = x}` (for `x` fixing 1).
pub fn lfix(g: &CoxeterGroup, m1: &TransformationMonoid, x: MIdx) -> Result<ElementId> {
    let f = m1.element(x);
    if f.apply(g.identity()) != g.identity() {
        return Err(Error::NotInMonoid);
    }
    let fixers: Vec<ElementId> = g
        .all()
        .filter(|&u| {
            let e = e_w(g, u);
            e.compose(f) == *f
        })
        .collect();
    let min = fixers
        .iter()
        .copied()
        .find(|&c| fixers.iter().all(|&u| g.le_l(c, u)))
        .expect("J-triviality forces a unique left-order minimum");
    Ok(min)
}

/// `rfix(x) = w0.x` (for `x` fixing 1).
pub fn rfix(g: &CoxeterGroup, m1: &TransformationMonoid, x: MIdx) -> Result<ElementId> {
    let f = m1.element(x);
    if f.apply(g.identity()) != g.identity() {
        return Err(Error::NotInMonoid);
    }
    Ok(f.apply(g.w0()))
}

/// The Cartan matrix of a Borel submonoid at `q = 1`: `c[u][v]` counts the
/// elements with `lfix = u`, `rfix = v`. For the `w0` anchor the counts are
/// carried through the bar involution, matching the simple modules indexed by
/// their fixed point.
pub fn cartan_borel(
    g: &CoxeterGroup,
    b: &TransformationMonoid,
    anchor: BorelAnchor,
) -> Result<Vec<Vec<i64>>> {
    let n = g.order();
    let mut c = vec![vec![0i64; n]; n];
    match anchor {
        BorelAnchor::Identity => {
            for x in 0..b.len() as MIdx {
                let u = lfix(g, b, x)?;
                let v = rfix(g, b, x)?;
                c[u.idx()][v.idx()] += 1;
            }
        }
        BorelAnchor::W0 => {
            // index the barred element and pull the labels back through w0
            let m1 = crate::fmonoid::borel(g, BorelAnchor::Identity, u128::MAX)?;
            for x in 0..b.len() as MIdx {
                let fb = bar(g, b.element(x));
                let xi = m1.index_of(&fb).ok_or(Error::NotInMonoid)?;
                let u = g.product(g.w0(), lfix(g, &m1, xi)?);
                let v = g.product(g.w0(), rfix(g, &m1, xi)?);
                c[u.idx()][v.idx()] += 1;
            }
        }
    }
    Ok(c)
}

/// The quiver of the Borel submonoid fixing 1, computed combinatorially:
/// edges `(x, z)` with `x >_B z`, `x` not `>_L z`, and no non-trivial
/// intermediate factor `y`.
pub fn quiver_m1(g: &CoxeterGroup) -> Vec<(ElementId, ElementId)> {
    let low_b = g.lower_bruhat().clone();
    let up_b = low_b.transpose();
    let low_l = g.lower_weak(Side::Left);
    let n = g.order();

    // y is an intermediate factor for (x, z) if [1,y]_L meets every Bruhat
    // interval [c,a]_B with a <= x and c <= z in left order.
    let intermediate = |x: usize, y: usize, z: usize| -> bool {
        for a in low_l.row(x).iter() {
            for c in low_l.row(z).iter() {
                if !low_b.get(a, c) {
                    continue; // c <=_B a fails
                }
                let mut meet = low_l.row(y).clone();
                meet.intersect_with(up_b.row(c));
                meet.intersect_with(low_b.row(a));
                if meet.is_empty() {
                    return false;
                }
            }
        }
        true
    };

    let mut edges = Vec::new();
    for x in 0..n {
        for z in 0..n {
            if x == z || !low_b.get(x, z) || low_l.row(x).contains(z) {
                continue; // need z <_B x and x not >=_L z
            }
            let nontrivial_factor = (0..n).any(|y| {
                y != x
                    && y != z
                    && low_b.get(x, y)
                    && low_b.get(y, z)
                    && !low_l.row(y).contains(z)
                    && intermediate(x, y, z)
            });
            if !nontrivial_factor {
                edges.push((ElementId(x as u32), ElementId(z as u32)));
            }
        }
    }
    // every Bruhat cover that is not a left cover must yield an edge
    for x in 0..n {
        for z in low_b.row(x).iter() {
            if g.length(ElementId(x as u32)) != g.length(ElementId(z as u32)) + 1
                || low_l.row(x).contains(z)
            {
                continue;
            }
            assert!(
                edges.contains(&(ElementId(x as u32), ElementId(z as u32))),
                "Bruhat cover without left cover must be a quiver edge"
            );
        }
    }
    edges.sort();
    edges
}

/// The unique minimal generating set of the Borel submonoid fixing 1 (the
/// identity element counts, as the empty product): all elements not generated
/// by the others.
pub fn minimal_generating_set(g: &CoxeterGroup, m1: &TransformationMonoid) -> Vec<MIdx> {
    let mut out = vec![m1.identity()];
    for x in 0..m1.len() as MIdx {
        if x == m1.identity() {
            continue;
        }
        // close everything except x (and the trivially-present identity)
        let gens: Vec<(String, WFunction)> = (0..m1.len() as MIdx)
            .filter(|&y| y != x && y != m1.identity())
            .map(|y| (y.to_string(), m1.element(y).clone()))
            .collect();
        let generated = if gens.is_empty() {
            false
        } else {
            let without =
                TransformationMonoid::closure(gens, m1.len() as u128).expect("submonoid closure");
            without.index_of(m1.element(x)).is_some()
        };
        if !generated {
            out.push(x);
        }
    }
    let _ = g;
    out
}
