//! Simple types, their Cartan matrices in the documented node labeling, and
//! classification-free helpers that work for any finite-type Cartan matrix.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn rank_ok(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// A finite irreducible type such as `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.rank_ok(rank) {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRank { family: family.letter(), rank })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Every type of rank at most `max_rank`, ordered A, B, C, D, E, F, G and by rank.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Cartan matrix with `cartan[i][j] = <alpha_i, alpha_j^vee>` (0-based indices).
    pub fn cartan_matrix(self) -> Matrix<i64> {
        let l = self.rank;
        let mut edges: Vec<(usize, usize, i64)> = Vec::new();
        let chain = |edges: &mut Vec<(usize, usize, i64)>, upto: usize| {
            for i in 1..upto {
                edges.push((i, i + 1, 1));
            }
        };
        match self.family {
            Family::A => chain(&mut edges, l),
            Family::B => {
                chain(&mut edges, l - 1);
                edges.push((l - 1, l, 2));
            }
            Family::C => {
                chain(&mut edges, l - 1);
                edges.push((l, l - 1, 2));
            }
            Family::D => {
                chain(&mut edges, l - 1);
                edges.push((l - 2, l, 1));
            }
            Family::E => {
                let list: &[(usize, usize)] = match l {
                    6 => &[(5, 3), (3, 2), (2, 4), (4, 6), (1, 2)],
                    7 => &[(1, 2), (2, 3), (3, 4), (4, 6), (6, 7), (3, 5)],
                    _ => &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 7), (5, 6), (6, 8)],
                };
                edges.extend(list.iter().map(|&(a, b)| (a, b, 1)));
            }
            Family::F => edges.extend([(1, 2, 1), (2, 3, 2), (3, 4, 1)]),
            Family::G => edges.push((2, 1, 3)),
        }
        let mut c = Matrix::identity(l).scale(&2);
        // (long, short, multiplicity): <alpha_long, alpha_short^vee> = -multiplicity
        for (long, short, mult) in edges {
            c[(long - 1, short - 1)] = -mult;
            c[(short - 1, long - 1)] = -1;
        }
        c
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return Err(bad());
        }
        let rank: usize = digits.parse().map_err(|_| bad())?;
        SimpleType::new(family, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `<x, alpha_j^vee>` for `x` in simple-root coordinates.
pub fn pairing(cartan: &Matrix<i64>, x: &[i64], j: usize) -> i64 {
    x.iter().enumerate().map(|(m, xm)| xm * cartan[(m, j)]).sum()
}

/// Positive roots of a finite-type Cartan matrix, sorted by height and then
/// lexicographically. Generated height by height from root strings: if
/// `beta - p alpha_j` is the bottom of the `alpha_j`-string through `beta`,
/// then `beta + alpha_j` is a root iff `p - <beta, alpha_j^vee> > 0`.
pub fn positive_roots(cartan: &Matrix<i64>) -> Vec<Vec<i64>> {
    let l = cartan.rows();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            let mut e = vec![0; l];
            e[i] = 1;
            e
        })
        .collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        known.extend(layer.iter().cloned());
        let mut next: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        for beta in &layer {
            for j in 0..l {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[j] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing(cartan, beta, j) > 0 {
                    let mut up = beta.clone();
                    up[j] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    all.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    all
}

/// Exponents from the height distribution of the positive roots: the number of
/// roots of height `k` equals the number of exponents `>= k`. Also valid for
/// reducible systems.
pub fn exponents_from_roots(roots: &[Vec<i64>], rank: usize) -> Vec<usize> {
    let mut count: HashMap<usize, usize> = HashMap::new();
    let mut max_h = 0;
    for r in roots {
        let h = r.iter().sum::<i64>() as usize;
        *count.entry(h).or_default() += 1;
        max_h = max_h.max(h);
    }
    let mut exps = Vec::with_capacity(rank);
    for k in 1..=max_h + 1 {
        let here = count.get(&k).copied().unwrap_or(0);
        let next = count.get(&(k + 1)).copied().unwrap_or(0);
        exps.extend(std::iter::repeat_n(k, here - next));
    }
    exps.sort_unstable();
    debug_assert_eq!(exps.len(), rank);
    exps
}

/// Principal submatrix on the given 0-based indices.
pub fn sub_cartan(cartan: &Matrix<i64>, nodes: &[usize]) -> Matrix<i64> {
    Matrix::from_fn(nodes.len(), nodes.len(), |a, b| cartan[(nodes[a], nodes[b])])
}

/// `prod [m_i + 1]` over the exponents.
pub fn poincare_from_exponents(exponents: &[usize]) -> IntPoly {
    exponents
        .iter()
        .fold(IntPoly::one(), |acc, &m| &acc * &IntPoly::q_int(m + 1))
}

/// Length generating function of the Weyl group of `cartan`, by breadth-first
/// search over the orbit of `rho` in Dynkin-label coordinates. Each level of
/// the search holds the elements of one length.
pub fn orbit_poincare(cartan: &Matrix<i64>) -> IntPoly {
    let l = cartan.rows();
    assert!(l <= 8, "orbit search supports rank at most 8");
    let mut start = [0i32; 8];
    start[..l].iter_mut().for_each(|x| *x = 1);
    let c: Vec<Vec<i32>> = (0..l).map(|i| (0..l).map(|j| cartan[(i, j)] as i32).collect()).collect();
    let mut counts = vec![1i64];
    let mut level: Vec<[i32; 8]> = vec![start];
    loop {
        let mut next: HashSet<[i32; 8]> = HashSet::new();
        for mu in &level {
            for i in 0..l {
                if mu[i] > 0 {
                    let mut nu = *mu;
                    let mi = mu[i];
                    for j in 0..l {
                        nu[j] -= mi * c[i][j];
                    }
                    next.insert(nu);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        counts.push(next.len() as i64);
        level = next.into_iter().collect();
    }
    IntPoly::new(counts)
}

/// Orbit searches above this many group elements use the product formula.
pub const ORBIT_LIMIT: u64 = 10_000_000;

/// Length generating function of the Weyl group of a (possibly reducible)
/// finite-type Cartan matrix. Uses [`orbit_poincare`] when the group has at
/// most `limit` elements and the product over exponents otherwise.
pub fn subsystem_poincare(cartan: &Matrix<i64>, limit: u64) -> IntPoly {
    let l = cartan.rows();
    if l == 0 {
        return IntPoly::one();
    }
    let exps = exponents_from_roots(&positive_roots(cartan), l);
    let order: u64 = exps.iter().map(|&m| m as u64 + 1).product();
    if order <= limit {
        orbit_poincare(cartan)
    } else {
        poincare_from_exponents(&exps)
    }
}
