//! Closed forms and tabulated data used by the verification report.

use crate::cartan::{Family, SimpleType};
use crate::group::GroupName;
use crate::poly::IntPoly;

fn up(a: usize, b: usize) -> Vec<usize> {
    if a > b { Vec::new() } else { (a..=b).collect() }
}

fn down(a: usize, b: usize) -> Vec<usize> {
    if a < b { Vec::new() } else { (b..=a).rev().collect() }
}

/// Tabulated words `w` with `w alpha_i = theta`, one per long simple root,
/// as `(i, letters)`.
pub fn theta_words(ty: SimpleType) -> Vec<(usize, Vec<usize>)> {
    let l = ty.rank();
    let cat = |parts: &[Vec<usize>]| parts.concat();
    match ty.family() {
        Family::A => (1..=l).map(|i| (i, cat(&[up(1, i - 1), down(l, i + 1)]))).collect(),
        Family::C => vec![(l, up(1, l - 1))],
        Family::B => (1..l)
            .map(|i| (i, cat(&[up(2, l), up(1, i - 1), down(l - 1, i + 1)])))
            .collect(),
        Family::D => {
            let mut v: Vec<(usize, Vec<usize>)> = (1..=l - 2)
                .map(|i| (i, cat(&[up(2, l - 2), up(1, i - 1), down(l, i + 1)])))
                .collect();
            for i in [l - 1, l] {
                v.push((i, cat(&[up(2, l - 2), up(1, l - 3), vec![2 * l - i - 1, l - 2]])));
            }
            v
        }
        Family::E => {
            let rows: &[&[usize]] = match l {
                6 => &[
                    &[1, 2, 3, 4, 2, 5, 3, 6, 4, 2],
                    &[1, 2, 3, 4, 2, 1, 5, 3, 6, 4],
                    &[1, 2, 3, 4, 2, 1, 5, 6, 4, 2],
                    &[1, 2, 3, 4, 2, 1, 5, 3, 2, 6],
                    &[1, 2, 3, 4, 2, 1, 6, 4, 2, 3],
                    &[1, 2, 3, 4, 2, 1, 5, 3, 2, 4],
                ],
                7 => &[
                    &[1, 2, 3, 4, 5, 3, 2, 6, 4, 3, 5, 7, 6, 4, 3, 2],
                    &[1, 2, 3, 4, 5, 3, 2, 1, 6, 4, 3, 5, 7, 6, 4, 3],
                    &[1, 2, 3, 4, 5, 3, 2, 1, 6, 4, 3, 2, 5, 7, 6, 4],
                    &[1, 2, 3, 4, 5, 3, 2, 1, 6, 4, 3, 2, 5, 3, 7, 6],
                    &[1, 2, 3, 4, 5, 3, 2, 1, 6, 4, 3, 2, 7, 6, 4, 3],
                    &[1, 2, 3, 4, 5, 3, 2, 1, 6, 4, 3, 2, 5, 3, 4, 7],
                    &[1, 2, 3, 4, 5, 3, 2, 1, 6, 4, 3, 2, 5, 3, 4, 6],
                ],
                _ => &[
                    &[1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 8, 6, 5, 4, 3, 7, 5, 4, 6, 5, 7, 8, 6, 5, 4, 3, 2],
                    &[1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 7, 5, 4, 6, 5, 7, 8, 6, 5, 4, 3],
                    &[1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 7, 5, 4, 6, 5, 7, 8, 6, 5, 4],
                    &[1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 7, 5, 4, 3, 6, 5, 7, 8, 6, 5],
                    &[1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 7, 5, 4, 3, 6, 5, 4, 7, 8, 6],
                    &[1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 7, 5, 4, 3, 6, 5, 4, 7, 5, 8],
                    &[1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 7, 5, 4, 3, 6, 5, 4, 8, 6, 5],
                    &[1, 2, 3, 4, 5, 6, 7, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 7, 5, 4, 3, 6, 5, 4, 7, 5, 6],
                ],
            };
            rows.iter().enumerate().map(|(k, r)| (k + 1, r.to_vec())).collect()
        }
        Family::F => vec![(1, vec![1, 2, 3, 2, 4, 3, 2]), (2, vec![1, 2, 3, 2, 1, 4, 3])],
        Family::G => vec![(2, vec![2, 1])],
    }
}

/// Closed form of `P_{alpha_i}(t)` for node `i` (1-based).
pub fn simple_root_poincare(ty: SimpleType, i: usize) -> IntPoly {
    let l = ty.rank();
    let q = IntPoly::q_int;
    let fact = IntPoly::q_factorial;
    let dfact = IntPoly::q_double_factorial;
    let div = |a: IntPoly, b: IntPoly| a.div_exact(&b).expect("closed form divides exactly");
    match ty.family() {
        Family::A => div(fact(l - 1), &fact(i - 1) * &fact(l - i)),
        Family::C => div(dfact(2 * i - 2), fact(i - 1)),
        Family::B => {
            if i == 1 { q(2) } else { div(dfact(2 * i - 4), fact(i - 2)) }
        }
        Family::D => {
            let i = if i == l { l - 1 } else { i };
            if i == 1 { q(2) } else { div(dfact(2 * i - 4), fact(i - 2)) }
        }
        Family::E => {
            let table: &[&[usize]] = match l {
                6 => &[&[], &[2], &[3], &[3], &[6], &[6]],
                7 => &[&[], &[2], &[3], &[4], &[4], &[6], &[6, 10]],
                _ => &[&[], &[2], &[3], &[4], &[5], &[6], &[6], &[8]],
            };
            let p = IntPoly::product(table[i - 1].iter().map(|&n| q(n)).collect::<Vec<_>>().iter());
            if l == 7 && i == 7 { div(p, q(5)) } else { p }
        }
        Family::F => match i {
            1 => IntPoly::one(),
            n => q(n),
        },
        Family::G => if i == 1 { q(2) } else { IntPoly::one() },
    }
}

/// Number of positive roots of `A_n`, zero for `n <= 0`.
fn n_a(n: i64) -> usize {
    if n <= 0 { 0 } else { (n * (n + 1) / 2) as usize }
}

/// Number of positive roots of `D_n`, with `D_2 = A_1 + A_1` and `D_3 = A_3`.
fn n_d(n: usize) -> usize {
    n * n.saturating_sub(1)
}

/// Row of the maximal-dimension table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaxDimRow {
    pub g_minus_1: i64,
    pub num_positive_roots: usize,
    /// Positive roots of the affine and finite perpendicular subsystems at the witness.
    pub n_hat: usize,
    pub n: usize,
    pub max_dim: i64,
}

/// The maximal-dimension table, with the perpendicular subsystems as tabulated.
pub fn max_dim_row(ty: SimpleType) -> MaxDimRow {
    let l = ty.rank();
    let li = l as i64;
    let (g_minus_1, np, n_hat, n, max_dim) = match ty.family() {
        Family::A if l <= 2 => (li, n_a(li), 0, 0, li),
        Family::A if l % 2 == 1 => (li, n_a(li), n_a(li - 2), 2 * n_a((li - 3) / 2), (li + 1) * (li + 1) / 4),
        Family::A => (li, n_a(li), n_a(li - 2), n_a((li - 2) / 2) + n_a((li - 4) / 2), (li * li + 2 * li) / 4),
        Family::C => (li, l * l, (l - 1) * (l - 1), n_a(li - 2), (li * li + li) / 2),
        Family::B if l == 2 => (2, 4, 1, 0, 3),
        Family::B if l == 3 => (4, 9, 2, 1, 5),
        Family::B => (2 * li - 2, l * l, n_d(l - 2), n_a(li - 3), (li * li - li + 2) / 2),
        Family::D => (2 * li - 3, l * (l - 1), n_d(l - 2) + 1, n_a(li - 3) + 1, (li * li - li) / 2),
        Family::E => match l {
            6 => (11, 36, 15, 10, 16),
            7 => (17, 63, 30, 20, 27),
            _ => (29, 120, 28, 21, 36),
        },
        Family::F => (8, 24, 2, 1, 9),
        Family::G => (3, 6, 0, 0, 3),
    };
    MaxDimRow { g_minus_1, num_positive_roots: np, n_hat, n, max_dim }
}

/// `(g - 1, N^, N)` of the exceptional decompositions in the introduction,
/// after deleting components common to both subsystems.
pub fn intro_decomposition(ty: SimpleType) -> Option<(i64, usize, usize)> {
    match (ty.family(), ty.rank()) {
        (Family::E, 6) => Some((11, 15, 10)),
        (Family::E, 7) => Some((17, 30, 20)),
        (Family::E, 8) => Some((29, 28, 21)),
        (Family::F, 4) => Some((8, 1, 0)),
        (Family::G, 2) => Some((3, 0, 0)),
        _ => None,
    }
}

/// Number of ideals of maximal dimension. `B_4` is added to the tabulated
/// list: there `2l - 1 = (l^2 - l + 2) / 2`, so `alpha_1` and `alpha_3` tie.
pub fn max_dim_multiplicity(ty: SimpleType) -> usize {
    let l = ty.rank();
    match ty.family() {
        Family::B if l == 4 => 2,
        Family::D if l == 4 => 3,
        Family::D => 2,
        Family::A if l % 2 == 0 => 2,
        Family::E if l == 6 => 2,
        _ => 1,
    }
}

/// `W(t) / W_{perp theta}(t)` from the Poincare table.
pub fn theta_quotient_poincare(ty: SimpleType) -> IntPoly {
    let l = ty.rank();
    let q = IntPoly::q_int;
    let ratio = |num: &[usize], den: &[usize]| {
        let a = IntPoly::product(num.iter().map(|&n| q(n)).collect::<Vec<_>>().iter());
        let b = IntPoly::product(den.iter().map(|&n| q(n)).collect::<Vec<_>>().iter());
        a.div_exact(&b).expect("closed form divides exactly")
    };
    match ty.family() {
        Family::A => ratio(&[l, l + 1], &[]),
        Family::C => ratio(&[2 * l], &[]),
        Family::B => ratio(&[2 * l - 2, 2 * l], &[2]),
        Family::D => ratio(&[l, 2 * l - 4, 2 * l - 2], &[2, l - 2]),
        Family::E => match l {
            6 => ratio(&[8, 9, 12], &[3, 4]),
            7 => ratio(&[12, 14, 18], &[4, 6]),
            _ => ratio(&[20, 24, 30], &[6, 10]),
        },
        Family::F => ratio(&[8, 12], &[4]),
        Family::G => ratio(&[6], &[]),
    }
}

/// `nu(X)`, the number of positive long roots.
pub fn nu(ty: SimpleType) -> usize {
    let l = ty.rank();
    match ty.family() {
        Family::A => l * (l + 1) / 2,
        Family::C => l,
        Family::B | Family::D => l * (l - 1),
        Family::E => [36, 63, 120][l - 6],
        Family::F => 12,
        Family::G => 3,
    }
}

/// Exponents as tabulated.
pub fn exponents(ty: SimpleType) -> Vec<usize> {
    let l = ty.rank();
    let mut e: Vec<usize> = match ty.family() {
        Family::A => (1..=l).collect(),
        Family::B | Family::C => (0..l).map(|k| 2 * k + 1).collect(),
        Family::D => (0..l - 1).map(|k| 2 * k + 1).chain([l - 1]).collect(),
        Family::E => match l {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        },
        Family::F => vec![1, 5, 7, 11],
        Family::G => vec![1, 5],
    };
    e.sort_unstable();
    e
}

/// `r_i` node by node for the classical displays (B from rank 3, D from rank 5, all C).
pub fn classical_r(ty: SimpleType) -> Option<Vec<usize>> {
    let l = ty.rank();
    match ty.family() {
        Family::C => Some(vec![1; l]),
        Family::B if l >= 3 => Some(
            (1..=l)
                .map(|i| match i {
                    1 => 1,
                    2 => 4 * l - 7,
                    i if i == l => 0,
                    i if i == l - 1 => 2,
                    i => 2 * l - 2 * i,
                })
                .collect(),
        ),
        Family::D if l >= 5 => Some(
            (1..=l)
                .map(|i| match i {
                    1 => 1,
                    2 => 4 * l - 7,
                    i if i >= l - 1 => 1,
                    i if i == l - 2 => 4,
                    i => 2 * l - 2 * i,
                })
                .collect(),
        ),
        _ => None,
    }
}

/// Terms `(r_i, P_{alpha_i}(1))` of the exceptional displays, sorted.
pub fn exceptional_sum_terms(ty: SimpleType) -> Option<Vec<(usize, i64)>> {
    let mut terms: Vec<(usize, i64)> = match (ty.family(), ty.rank()) {
        (Family::E, 6) => vec![(21, 1), (9, 2), (2, 3), (2, 3), (1, 6), (1, 6)],
        (Family::E, 7) => vec![(33, 1), (15, 2), (8, 3), (3, 4), (1, 4), (2, 6), (1, 12)],
        (Family::E, 8) => vec![(57, 1), (27, 2), (16, 3), (10, 4), (6, 5), (2, 6), (1, 6), (1, 8)],
        (Family::F, 4) => vec![(9, 1), (3, 2), (0, 3), (0, 4)],
        (Family::G, 2) => vec![(3, 1), (0, 2)],
        _ => return None,
    };
    terms.sort_unstable();
    Some(terms)
}

/// Expected automorphism group of the Hasse graph.
pub fn hasse_automorphisms(ty: SimpleType) -> GroupName {
    let l = ty.rank();
    match ty.family() {
        Family::A if l == 1 => GroupName::Cyclic(2),
        Family::A => GroupName::dihedral(l + 1),
        Family::B => GroupName::Cyclic(2),
        Family::C if l == 3 => GroupName::Klein,
        Family::C => GroupName::Cyclic(2),
        Family::D if l == 4 => GroupName::Symmetric4,
        Family::D => GroupName::Dihedral(4),
        Family::E => match l {
            6 => GroupName::Dihedral(3),
            7 => GroupName::Cyclic(2),
            _ => GroupName::Trivial,
        },
        Family::F => GroupName::Trivial,
        Family::G => GroupName::Cyclic(2),
    }
}


/// One row of the A11 gallery: the letter appended and the resulting
/// rho-point difference in simple-root coordinates.
pub type GalleryRow = (usize, [u8; 11]);

fn gallery(letters: [usize; 26], diffs: [&str; 26]) -> Vec<GalleryRow> {
    letters
        .iter()
        .zip(diffs)
        .map(|(&i, d)| {
            let mut v = [0u8; 11];
            for (slot, c) in v.iter_mut().zip(d.bytes()) {
                *slot = c - b'0';
            }
            (i, v)
        })
        .collect()
}

/// The two 26-step galleries for `A_11` (left and right word columns).
pub fn a11_galleries() -> (Vec<GalleryRow>, Vec<GalleryRow>) {
    let left = gallery(
        [0, 1, 2, 3, 4, 11, 10, 9, 8, 7, 6, 0, 1, 2, 11, 10, 9, 8, 7, 0, 1, 11, 10, 9, 0, 11],
        [
            "11111111111", "01111111111", "00111111111", "00011111111", "00001111111", "11111111110",
            "11111111100", "11111111000", "11111110000", "11111100000", "11111000000", "01111111110",
            "00111111110", "00011111110", "01111111100", "01111111000", "01111110000", "01111100000",
            "01111000000", "00111111100", "00011111100", "00111111000", "00111110000", "00111100000",
            "00011111000", "00011110000",
        ],
    );
    let right = gallery(
        [0, 1, 11, 0, 2, 1, 10, 11, 0, 3, 2, 1, 9, 10, 11, 0, 4, 8, 9, 10, 11, 7, 8, 9, 6, 7],
        [
            "11111111111", "01111111111", "11111111110", "01111111110", "00111111111", "00111111110",
            "11111111100", "01111111100", "00111111100", "00011111111", "00011111110", "00011111100",
            "11111111000", "01111111000", "00111111000", "00011111000", "00001111111", "11111110000",
            "01111110000", "00111110000", "00011110000", "11111100000", "01111100000", "00111100000",
            "11111000000", "01111000000",
        ],
    );
    (left, right)
}

/// Shape of the A11 example ideal as drawn next to its gallery (rows indexed by
/// the last simple root of each cell, columns by the first).
pub const A11_EXAMPLE_SHAPE: [usize; 7] = [5, 4, 4, 4, 4, 3, 2];
