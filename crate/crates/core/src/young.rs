//! Young diagrams with bounded hooks and the staircase picture of type A ideals.
//!
//! The positive roots of `A_l` fill a staircase: the root
//! `alpha_a + ... + alpha_b` sits in row `a`, column `l + 1 - b`, so `theta`
//! is the top-left cell. An abelian ideal is then a Young diagram whose
//! largest hook is at most `l`.

use std::fmt;

use serde::Serialize;

use crate::cartan::Family;
use crate::error::{Error, Result};
use crate::ideals::AbelianIdeal;
use crate::root_system::{Root, RootSystem};
use crate::scalar::Exact;

/// A partition, rows weakly decreasing and positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(rows));
        }
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Transpose: rows become columns.
    pub fn conjugate(&self) -> Self {
        let width = self.rows.first().copied().unwrap_or(0);
        let rows = (1..=width).map(|c| self.rows.iter().filter(|&&r| r >= c).count()).collect();
        Self { rows }
    }

    /// Hook length of the corner cell, 0 for the empty diagram.
    pub fn largest_hook(&self) -> usize {
        self.rows.first().map_or(0, |&r| r + self.rows.len() - 1)
    }

    /// Membership in `Y_N`: largest hook at most `N - 1`.
    pub fn in_y(&self, n: usize) -> bool {
        self.largest_hook() < n
    }

    fn check_in_y(&self, n: usize) -> Result<()> {
        if n == 0 || !self.in_y(n) {
            return Err(Error::HookTooLarge { hook: self.largest_hook(), max: n.saturating_sub(1) });
        }
        Ok(())
    }

    /// Rim bits from the bottom-left cell to the top-right cell: the first cell
    /// and every cell reached by a step to the right get 1, cells reached by a
    /// step up get 0.
    pub fn rim_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(self.largest_hook());
        let mut col = 0;
        for (k, &len) in self.rows.iter().enumerate().rev() {
            if k + 1 < self.rows.len() {
                bits.push(false);
            }
            while col < len {
                col += 1;
                bits.push(true);
            }
        }
        bits
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(ToString::to_string).collect();
        write!(f, "({})", rows.join(","))
    }
}

/// Rim code of a diagram in `Y_N`, most significant bit first.
pub fn young_encode(d: &YoungDiagram, n: usize) -> Result<u64> {
    d.check_in_y(n)?;
    Ok(d.rim_bits().iter().fold(0u64, |acc, &b| acc << 1 | u64::from(b)))
}

/// Inverse of [`young_encode`] on `[0, 2^(N-1))`.
pub fn young_decode(code: u64, n: usize) -> Result<YoungDiagram> {
    let bits = n.saturating_sub(1);
    if n == 0 || bits >= 64 || code >> bits != 0 {
        return Err(Error::CodeOutOfRange { code, bits });
    }
    if code == 0 {
        return Ok(YoungDiagram::empty());
    }
    let width = 64 - code.leading_zeros() as usize;
    let mut rows_from_bottom = Vec::new();
    let mut col = 0;
    for k in (0..width).rev() {
        if code >> k & 1 == 1 {
            col += 1;
        } else {
            rows_from_bottom.push(col);
        }
    }
    rows_from_bottom.push(col);
    rows_from_bottom.reverse();
    YoungDiagram::new(rows_from_bottom)
}

/// The rim code written with `N - 1` binary digits.
pub fn rim_string(d: &YoungDiagram, n: usize) -> Result<String> {
    let code = young_encode(d, n)?;
    Ok(format!("{code:0width$b}", width = n - 1))
}

/// All diagrams of `Y_N`, listed by rows independently of the rim code.
pub fn y_lattice(n: usize) -> Vec<YoungDiagram> {
    fn extend(rows: &mut Vec<usize>, max_hook: usize, out: &mut Vec<YoungDiagram>) {
        out.push(YoungDiagram { rows: rows.clone() });
        let cap = rows.last().copied().unwrap_or(max_hook);
        let first = rows.first().copied();
        for r in 1..=cap {
            let hook = first.unwrap_or(r) + rows.len();
            if hook > max_hook {
                continue;
            }
            rows.push(r);
            extend(rows, max_hook, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(&mut Vec::new(), n - 1, &mut out);
    }
    out.sort();
    out
}

fn check_type_a<Q: Exact>(rs: &RootSystem<Q>) -> Result<()> {
    if rs.simple_type().family() != Family::A {
        return Err(Error::WrongFamily { expected: 'A', found: rs.simple_type().to_string() });
    }
    Ok(())
}

/// `alpha_a + ... + alpha_b` for the staircase cell in row `a`, column `c` (1-based).
pub fn staircase_root(l: usize, row: usize, col: usize) -> Root {
    let b = l + 1 - col;
    Root::new((1..=l).map(|i| i64::from(row <= i && i <= b)).collect())
}

/// The staircase picture of a type A ideal.
pub fn young_of_ideal<Q: Exact>(rs: &RootSystem<Q>, a: &AbelianIdeal) -> Result<YoungDiagram> {
    check_type_a(rs)?;
    let l = rs.rank();
    let mut rows = vec![0usize; l];
    for r in a.roots() {
        rows[r.support()[0] - 1] += 1;
    }
    while rows.last() == Some(&0) {
        rows.pop();
    }
    let d = YoungDiagram::new(rows.clone()).map_err(|_| Error::InvariantViolation(format!("{rows:?} is not a partition")))?;
    let cells_ok = d
        .rows()
        .iter()
        .enumerate()
        .all(|(k, &len)| (1..=len).all(|c| a.contains(&staircase_root(l, k + 1, c))));
    if !cells_ok || d.num_cells() != a.dim() {
        return Err(Error::InvariantViolation("ideal does not fill a diagram".into()));
    }
    Ok(d)
}

/// The type A ideal drawn by a diagram of `Y_{l+1}`.
pub fn ideal_of_young<Q: Exact>(rs: &RootSystem<Q>, d: &YoungDiagram) -> Result<AbelianIdeal> {
    check_type_a(rs)?;
    let l = rs.rank();
    d.check_in_y(l + 1)?;
    let roots: Vec<Root> = d
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(k, &len)| (1..=len).map(move |c| staircase_root(l, k + 1, c)))
        .collect();
    rs.abelian_ideal(&roots)
}
