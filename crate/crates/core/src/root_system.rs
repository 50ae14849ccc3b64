//! Root systems with the canonical normalization `(theta|theta) = 1/g`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::cartan::{self, SimpleType};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Exact;

/// A root (or any integer vector) in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// The simple root `alpha_i`, with `i` 1-based.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Self(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    /// Nodes (1-based) with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).map(|i| i + 1).collect()
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A rational vector in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector<Q>(Vec<Q>);

impl<Q: Exact> WeightVector<Q> {
    pub fn new(coords: Vec<Q>) -> Self {
        Self(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![Q::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| Q::from_int(c)).collect())
    }

    /// `coords / den` for an integer vector.
    pub fn from_scaled_ints(coords: &[i64], den: i64) -> Self {
        Self(coords.iter().map(|&c| Q::ratio(c, den)).collect())
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, k: &Q) -> Self {
        Self(self.0.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// The integer coordinates, if all coordinates are integers.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(Exact::to_int).collect()
    }
}

impl<Q: Exact> From<&Root> for WeightVector<Q> {
    fn from(r: &Root) -> Self {
        Self::from_ints(r.coords())
    }
}

impl<Q: Exact> Add for &WeightVector<Q> {
    type Output = WeightVector<Q>;
    fn add(self, rhs: &WeightVector<Q>) -> WeightVector<Q> {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a.clone() + b.clone()).collect())
    }
}

impl<Q: Exact> Sub for &WeightVector<Q> {
    type Output = WeightVector<Q>;
    fn sub(self, rhs: &WeightVector<Q>) -> WeightVector<Q> {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a.clone() - b.clone()).collect())
    }
}

impl<Q: Exact> fmt::Display for WeightVector<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A finite irreducible root system with exact data.
///
/// Inner products are `(x|y) = form_scale * x^T B y` where `B` is the integer
/// symmetrized Cartan matrix; [`RootSystem::gram`] holds the rational product.
#[derive(Clone, Debug)]
pub struct RootSystem<Q> {
    ty: SimpleType,
    cartan: Matrix<i64>,
    form: Matrix<i64>,
    form_scale: Q,
    gram: Matrix<Q>,
    positive_roots: Vec<Root>,
    index: HashMap<Root, usize>,
    theta: Root,
    theta_coroot: Vec<i64>,
    exponents: Vec<usize>,
    g: i64,
    h: i64,
    rho2: Vec<i64>,
    rho: WeightVector<Q>,
    fundamental_weights: Vec<WeightVector<Q>>,
    coweights: Vec<WeightVector<Q>>,
    long_norm: i64,
}

/// Minimal positive integers `d` with `cartan[i][j] d_j = cartan[j][i] d_i`.
fn symmetrizer(cartan: &Matrix<i64>) -> Vec<i64> {
    let l = cartan.rows();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; l];
    d[0] = Some(Ratio::from_integer(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let di = d[i].expect("visited node has a value");
        for j in 0..l {
            if i != j && cartan[(i, j)] != 0 && d[j].is_none() {
                d[j] = Some(di * cartan[(j, i)] / cartan[(i, j)]);
                stack.push(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("Dynkin diagram is connected")).collect();
    let den = d.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * den).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    ints.into_iter().map(|x| x / g).collect()
}

impl<Q: Exact> RootSystem<Q> {
    pub fn build(ty: SimpleType) -> Self {
        let l = ty.rank();
        let cartan = ty.cartan_matrix();
        let d = symmetrizer(&cartan);
        let form = Matrix::from_fn(l, l, |i, j| cartan[(i, j)] * d[j]);
        debug_assert!(form.is_symmetric());

        let positive_roots: Vec<Root> = cartan::positive_roots(&cartan).into_iter().map(Root).collect();
        let index = positive_roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        let theta = positive_roots.last().expect("nonempty root system").clone();
        let exponents =
            cartan::exponents_from_roots(&positive_roots.iter().map(|r| r.0.clone()).collect::<Vec<_>>(), l);
        let mut rho2 = vec![0; l];
        for r in &positive_roots {
            for (acc, c) in rho2.iter_mut().zip(&r.0) {
                *acc += c;
            }
        }
        let theta_norm = form.bilinear(&theta.0, &theta.0);
        let rho_theta = form.bilinear(&rho2, &theta.0);
        assert_eq!(rho_theta % theta_norm, 0, "<rho, theta^vee> must be an integer");
        let g = 1 + rho_theta / theta_norm;
        let h = theta.height() + 1;
        let theta_coroot: Vec<i64> = (0..l)
            .map(|i| {
                let mut e = vec![0; l];
                e[i] = 1;
                2 * form.bilinear(&e, &theta.0) / theta_norm
            })
            .collect();
        let long_norm = (0..l).map(|i| form[(i, i)]).max().expect("rank at least one");

        let form_scale = Q::one() / (Q::from_int(g) * Q::from_int(theta_norm));
        let gram = form.map(|&b| Q::from_int(b) * form_scale.clone());
        let cq = cartan.map(|&c| Q::from_int(c));
        let cinv = cq.inverse().expect("Cartan matrix is invertible");
        let fundamental_weights: Vec<WeightVector<Q>> =
            (0..l).map(|i| WeightVector(cinv.row(i).to_vec())).collect();
        let coweights = fundamental_weights
            .iter()
            .enumerate()
            .map(|(i, w)| w.scale(&(Q::one() / gram[(i, i)].clone())))
            .collect();
        let rho = WeightVector::from_scaled_ints(&rho2, 2);

        Self {
            ty,
            cartan,
            form,
            form_scale,
            gram,
            positive_roots,
            index,
            theta,
            theta_coroot,
            exponents,
            g,
            h,
            rho2,
            rho,
            fundamental_weights,
            coweights,
            long_norm,
        }
    }

    /// Build from a type string such as `"E6"`.
    pub fn of(s: &str) -> Result<Self> {
        Ok(Self::build(SimpleType::from_str(s)?))
    }

    /// A copy whose Gram matrix is multiplied by `factor`. Used to check that
    /// the normalization checks detect a wrong scale.
    pub fn with_scaled_gram(&self, factor: &Q) -> Self {
        let mut out = self.clone();
        out.gram = self.gram.scale(factor);
        out
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn cartan(&self) -> &Matrix<i64> {
        &self.cartan
    }

    pub fn gram(&self) -> &Matrix<Q> {
        &self.gram
    }

    /// Integer symmetric matrix `B` with `(x|y)` proportional to `x^T B y`.
    pub fn integer_form(&self) -> &Matrix<i64> {
        &self.form
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `|Phi_+|`, the length of the longest Weyl group element.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Dimension of the Lie algebra, `l + |Phi|`.
    pub fn lie_dimension(&self) -> usize {
        self.rank() + 2 * self.num_positive_roots()
    }

    pub fn theta(&self) -> &Root {
        &self.theta
    }

    /// Coefficients of `theta` in the simple roots.
    pub fn marks(&self) -> &[i64] {
        self.theta.coords()
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    /// Dual Coxeter number.
    pub fn g(&self) -> i64 {
        self.g
    }

    /// Coxeter number.
    pub fn h(&self) -> i64 {
        self.h
    }

    pub fn rho(&self) -> &WeightVector<Q> {
        &self.rho
    }

    /// `2 rho`, which has integer coordinates.
    pub fn two_rho(&self) -> &[i64] {
        &self.rho2
    }

    pub fn fundamental_weights(&self) -> &[WeightVector<Q>] {
        &self.fundamental_weights
    }

    /// `fundamental_weights[i] / |alpha_i|^2`.
    pub fn coweights(&self) -> &[WeightVector<Q>] {
        &self.coweights
    }

    /// `<alpha_i, theta^vee>` for each node, 0-based.
    pub fn theta_coroot(&self) -> &[i64] {
        &self.theta_coroot
    }

    /// Index of a positive root in [`RootSystem::positive_roots`].
    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r) || self.index.contains_key(&-r)
    }

    pub fn is_positive_root(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.rank(), found: n })
        }
    }

    /// `x^T B y` for integer vectors.
    pub fn form_int(&self, x: &[i64], y: &[i64]) -> i64 {
        self.form.bilinear(x, y)
    }

    /// `(x|y)` from the Gram matrix.
    pub fn inner(&self, x: &WeightVector<Q>, y: &WeightVector<Q>) -> Result<Q> {
        self.check_len(x.rank())?;
        self.check_len(y.rank())?;
        Ok(self.gram.bilinear(x.coords(), y.coords()))
    }

    pub fn norm_sq(&self, x: &WeightVector<Q>) -> Result<Q> {
        self.inner(x, x)
    }

    pub fn root_norm_sq(&self, r: &Root) -> Q {
        let w = WeightVector::from(r);
        self.gram.bilinear(w.coords(), w.coords())
    }

    /// `<lambda, phi^vee> = 2(lambda|phi)/(phi|phi)`.
    pub fn coroot_pairing(&self, lambda: &WeightVector<Q>, phi: &Root) -> Result<Q> {
        self.check_len(lambda.rank())?;
        self.check_len(phi.rank())?;
        if phi.is_zero() {
            return Err(Error::ZeroRoot);
        }
        if !self.is_root(phi) {
            return Err(Error::NotARoot(phi.coords().to_vec()));
        }
        let p = WeightVector::from(phi);
        let num = self.gram.bilinear(lambda.coords(), p.coords());
        let den = self.gram.bilinear(p.coords(), p.coords());
        Ok(Q::from_int(2) * num / den)
    }

    /// `<x, phi^vee>` for integer `x` and a root `phi`; exact integer when `x`
    /// lies in the root lattice.
    pub fn coroot_pairing_int(&self, x: &[i64], phi: &Root) -> i64 {
        let num = 2 * self.form.bilinear(x, phi.coords());
        let den = self.form.bilinear(phi.coords(), phi.coords());
        debug_assert_eq!(num % den, 0, "pairing is not integral");
        num / den
    }

    /// `<x, alpha_j^vee>` with `j` 0-based.
    pub fn simple_pairing(&self, x: &[i64], j: usize) -> i64 {
        cartan::pairing(&self.cartan, x, j)
    }

    /// `<x, theta^vee>`.
    pub fn theta_pairing(&self, x: &[i64]) -> i64 {
        x.iter().zip(&self.theta_coroot).map(|(a, b)| a * b).sum()
    }

    /// `L(phi) = 2(theta - phi | rho)/(theta|theta)`.
    pub fn l_functional(&self, phi: &Root) -> Result<Q> {
        self.check_len(phi.rank())?;
        if !self.is_root(phi) {
            return Err(Error::NotARoot(phi.coords().to_vec()));
        }
        let diff = WeightVector::from(&(&self.theta - phi));
        let t = WeightVector::from(&self.theta);
        let num = self.gram.bilinear(diff.coords(), self.rho.coords());
        let den = self.gram.bilinear(t.coords(), t.coords());
        Ok(Q::from_int(2) * num / den)
    }

    /// `L(phi)` as an integer, for long roots.
    pub fn l_value(&self, phi: &Root) -> Result<i64> {
        self.l_functional(phi)?
            .to_int()
            .ok_or_else(|| Error::NotLong(phi.coords().to_vec()))
    }

    pub fn is_long(&self, r: &Root) -> bool {
        self.form.bilinear(r.coords(), r.coords()) == self.long_norm
    }

    pub fn long_positive_roots(&self) -> Vec<Root> {
        let mut v: Vec<Root> = self.positive_roots.iter().filter(|r| self.is_long(r)).cloned().collect();
        v.sort();
        v
    }

    /// Long simple roots as 1-based node indices.
    pub fn long_simple_nodes(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.form[(i, i)] == self.long_norm).map(|i| i + 1).collect()
    }

    pub fn height(&self, phi: &Root) -> i64 {
        phi.height()
    }

    /// `s_i x` for 0-based `i` on an integer vector.
    pub fn reflect_int(&self, i: usize, x: &mut [i64]) {
        let p = self.simple_pairing(x, i);
        x[i] -= p;
    }

    /// Require a positive root.
    pub fn check_positive(&self, phi: &Root) -> Result<()> {
        self.check_len(phi.rank())?;
        if self.is_positive_root(phi) {
            Ok(())
        } else if self.is_root(phi) {
            Err(Error::NotPositive(phi.coords().to_vec()))
        } else {
            Err(Error::NotARoot(phi.coords().to_vec()))
        }
    }

    /// Require a positive long root.
    pub fn check_positive_long(&self, phi: &Root) -> Result<()> {
        self.check_positive(phi)?;
        if !self.is_long(phi) {
            return Err(Error::NotLong(phi.coords().to_vec()));
        }
        Ok(())
    }

    /// `x^T B y` scaled into `(x|y)` for integer vectors.
    pub fn inner_int(&self, x: &[i64], y: &[i64]) -> Q {
        Q::from_int(self.form.bilinear(x, y)) * self.form_scale.clone()
    }

    /// Neighbours of `node` in the extended Dynkin diagram, where node 0 is affine.
    pub fn affine_neighbours(&self, node: usize) -> Vec<usize> {
        let l = self.rank();
        let ext = self.extended_cartan();
        (0..=l).filter(|&j| j != node && ext[(node, j)] != 0).collect()
    }

    /// Cartan matrix of the affine diagram, index 0 standing for `alpha_0 = -theta`.
    pub fn extended_cartan(&self) -> Matrix<i64> {
        let l = self.rank();
        let minus_theta = (-&self.theta).0;
        Matrix::from_fn(l + 1, l + 1, |i, j| match (i, j) {
            (0, 0) => 2,
            (0, j) => self.simple_pairing(&minus_theta, j - 1),
            (i, 0) => -self.theta_coroot[i - 1],
            (i, j) => self.cartan[(i - 1, j - 1)],
        })
    }
}

/// Root systems over arbitrary-precision rationals.
pub type RootSystemQ = RootSystem<num_rational::BigRational>;
/// Root systems over `i64` rationals.
pub type RootSystem64 = RootSystem<num_rational::Rational64>;

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type Rs = RootSystem<Rational64>;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn dual_coxeter_numbers() {
        let expect = [
            ("A1", 2), ("A5", 6), ("B3", 5), ("B6", 11), ("C4", 5), ("D5", 8), ("E6", 12), ("E7", 18),
            ("E8", 30), ("F4", 9), ("G2", 4),
        ];
        for (s, g) in expect {
            assert_eq!(Rs::of(s).unwrap().g(), g, "{s}");
        }
    }

    #[test]
    fn g2_data() {
        let rs = Rs::of("G2").unwrap();
        assert_eq!(rs.marks(), &[3, 2]);
        assert_eq!(rs.g(), 4);
        let t = WeightVector::from(rs.theta());
        assert_eq!(rs.inner(&t, &t).unwrap(), q(1, 4));
        assert_eq!(rs.l_functional(&Root::simple(2, 2)).unwrap(), q(2, 1));
        assert_eq!(rs.long_positive_roots().len(), 3);
    }

    #[test]
    fn e8_data() {
        let rs = Rs::of("E8").unwrap();
        assert_eq!(rs.num_positive_roots(), 120);
        assert_eq!(rs.g() - 1, 29);
        assert_eq!(rs.exponents(), &[1, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(rs.marks(), &[2, 3, 4, 5, 6, 4, 3, 2]);
    }

    #[test]
    fn a1_data() {
        let rs = Rs::of("A1").unwrap();
        assert_eq!(rs.positive_roots().len(), 1);
        assert_eq!(rs.g(), 2);
        let t = WeightVector::from(rs.theta());
        assert_eq!(rs.inner(&t, &t).unwrap(), q(1, 2));
    }

    #[test]
    fn pairings() {
        let rs = Rs::of("B4").unwrap();
        let th = rs.theta().clone();
        assert_eq!(rs.coroot_pairing(rs.rho(), &th).unwrap(), q(rs.g() - 1, 1));
        for i in 0..4 {
            for j in 0..4 {
                let a = Root::simple(4, j + 1);
                let v = rs.coroot_pairing(&rs.fundamental_weights()[i], &a).unwrap();
                assert_eq!(v, q((i == j) as i64, 1));
            }
            let a = Root::simple(4, i + 1);
            assert_eq!(rs.coroot_pairing(&WeightVector::from(&a), &a).unwrap(), q(2, 1));
        }
        assert_eq!(rs.coroot_pairing(rs.rho(), &Root::zero(4)), Err(Error::ZeroRoot));
    }

    #[test]
    fn l_values() {
        for s in ["A4", "C3", "D5", "E6", "F4"] {
            let rs = Rs::of(s).unwrap();
            assert_eq!(rs.l_value(rs.theta()).unwrap(), 0);
            for i in rs.long_simple_nodes() {
                assert_eq!(rs.l_value(&Root::simple(rs.rank(), i)).unwrap(), rs.g() - 2, "{s} {i}");
            }
            for r in rs.positive_roots() {
                if r != rs.theta() {
                    assert!(rs.l_functional(r).unwrap() > q(0, 1));
                }
            }
        }
    }

    #[test]
    fn heights() {
        let rs = Rs::of("E7").unwrap();
        assert_eq!(rs.height(rs.theta()), rs.h() - 1);
        assert_eq!(rs.height(&-rs.theta()), -(rs.h() - 1));
        assert_eq!(rs.height(&Root::simple(7, 3)), 1);
    }

    #[test]
    fn long_root_counts() {
        assert_eq!(Rs::of("F4").unwrap().long_positive_roots().len(), 12);
        assert_eq!(Rs::of("A6").unwrap().long_positive_roots().len(), 21);
        assert_eq!(Rs::of("C5").unwrap().long_positive_roots().len(), 5);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let rs = Rs::of("A2").unwrap();
        let x = WeightVector::<Rational64>::zero(3);
        assert_eq!(
            rs.inner(&x, rs.rho()),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn affine_node_attachment() {
        assert_eq!(Rs::of("A5").unwrap().affine_neighbours(0), vec![1, 5]);
        assert_eq!(Rs::of("B5").unwrap().affine_neighbours(0), vec![2]);
        assert_eq!(Rs::of("C5").unwrap().affine_neighbours(0), vec![1]);
        assert_eq!(Rs::of("D6").unwrap().affine_neighbours(0), vec![2]);
        assert_eq!(Rs::of("G2").unwrap().affine_neighbours(0), vec![2]);
        assert_eq!(Rs::of("F4").unwrap().affine_neighbours(0), vec![1]);
        for s in ["E6", "E7", "E8"] {
            assert_eq!(Rs::of(s).unwrap().affine_neighbours(0), vec![1], "{s}");
        }
    }
}
