//! Exact linear algebra over the rationals, with an optional modular mode
//! (three fixed 62-bit primes, results cross-checked for agreement).
//!
//! The workhorse is [`Subspace`], a row space kept in reduced row echelon
//! form; with RREF the coefficient of a basis row in any vector of the space
//! can be read off at the pivot column, which makes traces of
//! subspace-stabilizing operators cheap.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The three fixed 62-bit primes backing modular mode.
pub const MODULAR_PRIMES: [u64; 3] =
    [4611686018427387847, 4611686018427387817, 4611686018427387787];

/// A field given as a context object (so prime fields can carry their prime).
pub trait Ring: Copy + Send + Sync {
    type Elem: Clone + PartialEq + Send + Sync + std::fmt::Debug;
    fn zero(self) -> Self::Elem;
    fn one(self) -> Self::Elem;
    fn is_zero(self, a: &Self::Elem) -> bool;
    fn add(self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse of a nonzero element.
    fn inv(self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(self, v: i64) -> Self::Elem;
    /// Interpret a field element as a small integer if possible (used to lift
    /// modular results; rationals must be integral).
    fn to_small_integer(self, a: &Self::Elem) -> Option<i64>;
}

/// The rational numbers.
#[derive(Copy, Clone)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(self) -> BigRational {
        BigRational::zero()
    }
    fn one(self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn from_i64(self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn to_small_integer(self, a: &BigRational) -> Option<i64> {
        if !a.is_integer() {
            return None;
        }
        let n = a.numer();
        if n.abs() <= BigInt::from(i64::MAX) {
            let (sign, digits) = n.to_u64_digits();
            let mag = *digits.first().unwrap_or(&0) as i64;
            Some(if sign == num_bigint::Sign::Minus { -mag } else { mag })
        } else {
            None
        }
    }
}

/// The prime field `Z/p` for a 62-bit prime `p`.
#[derive(Copy, Clone)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> PrimeField {
        PrimeField { p }
    }

    fn pow(self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(self) -> u64 {
        0
    }
    fn one(self) -> u64 {
        1
    }
    fn is_zero(self, a: &u64) -> bool {
        *a == 0
    }
    fn add(self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }
    fn sub(self, a: &u64, b: &u64) -> u64 {
        if a >= b { a - b } else { a + self.p - b }
    }
    fn mul(self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(self, a: &u64) -> u64 {
        if *a == 0 { 0 } else { self.p - a }
    }
    fn inv(self, a: &u64) -> u64 {
        debug_assert!(*a != 0);
        self.pow(*a, self.p - 2)
    }
    fn from_i64(self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn to_small_integer(self, a: &u64) -> Option<i64> {
        // symmetric lift
        if *a <= self.p / 2 { Some(*a as i64) } else { Some(*a as i64 - self.p as i64) }
    }
}

/// A row space in reduced row echelon form.
pub struct Subspace<R: Ring> {
    ring: R,
    width: usize,
    rows: Vec<Vec<R::Elem>>,
    pivots: Vec<usize>,
}

impl<R: Ring> Subspace<R> {
    pub fn new(ring: R, width: usize) -> Subspace<R> {
        Subspace { ring, width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<R::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the basis in place.
    pub fn reduce(&self, v: &mut [R::Elem]) {
        let ring = self.ring;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if ring.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = ring.sub(x, &ring.mul(&c, r));
            }
        }
    }

    pub fn contains(&self, v: &[R::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.ring.is_zero(x))
    }

    /// Insert `v`; returns true when the dimension grew.
    pub fn insert(&mut self, v: Vec<R::Elem>) -> bool {
        let ring = self.ring;
        let mut v = v;
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !ring.is_zero(x)) else {
            return false;
        };
        let c = ring.inv(&v[p]);
        for x in v.iter_mut() {
            *x = ring.mul(x, &c);
        }
        // eliminate the new pivot from existing rows to keep RREF
        for row in self.rows.iter_mut() {
            if ring.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                *x = ring.sub(x, &ring.mul(&c, y));
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    /// Coefficient of basis row `i` in the expansion of `v`, assuming
    /// `v` lies in the space (valid because the basis is in RREF).
    pub fn coeff_at(&self, v: &[R::Elem], i: usize) -> R::Elem {
        v[self.pivots[i]].clone()
    }
}

/// Rank of a dense matrix (rows of equal width).
pub fn rank<R: Ring>(ring: R, rows: &[Vec<R::Elem>]) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut s = Subspace::new(ring, width);
    for r in rows {
        s.insert(r.clone());
    }
    s.dim()
}

/// Basis of `{x : A x = 0}` (column kernel).
pub fn kernel<R: Ring>(ring: R, a: &[Vec<R::Elem>]) -> Vec<Vec<R::Elem>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut s = Subspace::new(ring, ncols);
    for r in a {
        s.insert(r.clone());
    }
    // free columns parametrize the kernel
    let mut is_pivot = vec![usize::MAX; ncols];
    for (i, &p) in s.pivots().iter().enumerate() {
        is_pivot[p] = i;
    }
    let mut out = Vec::new();
    for c in 0..ncols {
        if is_pivot[c] != usize::MAX {
            continue;
        }
        let mut x = vec![ring.zero(); ncols];
        x[c] = ring.one();
        for (i, row) in s.rows().iter().enumerate() {
            x[s.pivots()[i]] = ring.neg(&row[c]);
        }
        out.push(x);
    }
    out
}

/// Left nullspace `{v : v A = 0}`.
pub fn left_kernel<R: Ring>(ring: R, a: &[Vec<R::Elem>]) -> Vec<Vec<R::Elem>> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut t = vec![vec![ring.zero(); nrows]; ncols];
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            t[j][i] = x.clone();
        }
    }
    kernel(ring, &t)
}

/// Solve `A x = b` for several right-hand sides at once; `None` when any
/// system is inconsistent or `A` lacks full column rank.
pub fn solve_full_rank<R: Ring>(
    ring: R,
    a: &[Vec<R::Elem>],
    bs: &[Vec<R::Elem>],
) -> Option<Vec<Vec<R::Elem>>> {
    let ncols = a.first().map_or(0, Vec::len);
    let k = bs.len();
    // augmented RREF
    let mut s = Subspace::new(ring, ncols + k);
    for (i, row) in a.iter().enumerate() {
        let mut aug = row.clone();
        for b in bs {
            aug.push(b[i].clone());
        }
        s.insert(aug);
    }
    // require full column rank on the coefficient part
    let mut pivot_of_col = vec![usize::MAX; ncols];
    for (i, &p) in s.pivots().iter().enumerate() {
        if p >= ncols {
            return None; // pivot in the RHS block: inconsistent
        }
        pivot_of_col[p] = i;
    }
    if pivot_of_col.iter().any(|&i| i == usize::MAX) {
        return None;
    }
    let mut out = Vec::with_capacity(k);
    for (t, _) in bs.iter().enumerate() {
        let mut x = vec![ring.zero(); ncols];
        for c in 0..ncols {
            x[c] = s.rows()[pivot_of_col[c]][ncols + t].clone();
        }
        out.push(x);
    }
    Some(out)
}

/// An integer polynomial in `q`, coefficients by ascending degree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly(pub Vec<i64>);

impl QPoly {
    pub fn zero() -> QPoly {
        QPoly(Vec::new())
    }

    pub fn constant(c: i64) -> QPoly {
        if c == 0 { QPoly::zero() } else { QPoly(vec![c]) }
    }

    pub fn q_power(k: usize, c: i64) -> QPoly {
        if c == 0 {
            return QPoly::zero();
        }
        let mut v = vec![0; k + 1];
        v[k] = c;
        QPoly(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add_term(&mut self, k: usize, c: i64) {
        if c == 0 {
            return;
        }
        if self.0.len() <= k {
            self.0.resize(k + 1, 0);
        }
        self.0[k] += c;
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() { None } else { Some(self.0.len() - 1) }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl std::fmt::Display for QPoly {
    /// Renders like the tables: `.` for zero, `q^3+2q^2+q`, highest degree first.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, ".");
        }
        let mut first = true;
        for k in (0..self.0.len()).rev() {
            let c = self.0[k];
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_rref() {
        let r = Rationals;
        let mut s = Subspace::new(r, 3);
        let v = |a: i64, b: i64, c: i64| vec![r.from_i64(a), r.from_i64(b), r.from_i64(c)];
        assert!(s.insert(v(2, 4, 0)));
        assert!(s.insert(v(0, 0, 3)));
        assert!(!s.insert(v(1, 2, 3)));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(4, 8, -3)));
        assert!(!s.contains(&v(1, 0, 0)));
    }

    #[test]
    fn kernel_and_rank() {
        let r = Rationals;
        let m = vec![
            vec![r.from_i64(1), r.from_i64(2), r.from_i64(3)],
            vec![r.from_i64(2), r.from_i64(4), r.from_i64(6)],
        ];
        assert_eq!(rank(r, &m), 1);
        let k = kernel(r, &m);
        assert_eq!(k.len(), 2);
        for x in &k {
            for row in &m {
                let dot = row
                    .iter()
                    .zip(x)
                    .fold(r.zero(), |acc, (a, b)| r.add(&acc, &r.mul(a, b)));
                assert!(r.is_zero(&dot));
            }
        }
    }

    #[test]
    fn modular_agrees_with_rational() {
        for p in MODULAR_PRIMES {
            let f = PrimeField::new(p);
            let m = vec![
                vec![f.from_i64(1), f.from_i64(2), f.from_i64(3)],
                vec![f.from_i64(2), f.from_i64(4), f.from_i64(6)],
                vec![f.from_i64(0), f.from_i64(1), f.from_i64(-1)],
            ];
            assert_eq!(rank(f, &m), 2);
            assert_eq!(kernel(f, &m).len(), 1);
            assert_eq!(f.to_small_integer(&f.from_i64(-5)), Some(-5));
            assert_eq!(f.mul(&f.inv(&7), &7), 1);
        }
    }

    #[test]
    fn solver() {
        let r = Rationals;
        let a = vec![
            vec![r.from_i64(1), r.from_i64(1)],
            vec![r.from_i64(1), r.from_i64(-1)],
        ];
        let b = vec![vec![r.from_i64(3), r.from_i64(1)]];
        let x = solve_full_rank(r, &a, &b).unwrap();
        assert_eq!(x[0], vec![r.from_i64(2), r.from_i64(1)]);
    }

    #[test]
    fn qpoly_display() {
        assert_eq!(QPoly::zero().to_string(), ".");
        assert_eq!(QPoly::constant(1).to_string(), "1");
        assert_eq!(QPoly::q_power(1, 1).to_string(), "q");
        let mut p = QPoly::q_power(3, 1);
        p.add_term(2, 2);
        p.add_term(1, 1);
        assert_eq!(p.to_string(), "q^3+2q^2+q");
        assert_eq!(p.eval_at_one(), 4);
    }
}
