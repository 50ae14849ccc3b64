//! Automorphism groups of small undirected graphs and their identification.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

/// A permutation of `0..n`, `p[i]` being the image of `i`.
pub type Perm = Vec<usize>;

/// Stable colouring by iterated neighbour-colour refinement, starting from degrees.
pub fn refine_colours(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = adj[v].iter().map(|&w| colour[w]).collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let next_classes = distinct.len();
        // renumber by sorted signature so colours do not depend on vertex order
        let rank: BTreeMap<&(usize, Vec<usize>), usize> = distinct.into_iter().enumerate().map(|(k, s)| (s, k)).collect();
        colour = sigs.iter().map(|s| rank[s]).collect();
        if next_classes == classes {
            return colour;
        }
        classes = next_classes;
    }
}

/// All automorphisms of a connected graph, by backtracking along a BFS order
/// with candidates restricted by the refined colouring.
pub fn automorphisms(adj: &[Vec<usize>]) -> Vec<Perm> {
    let n = adj.len();
    if n == 0 {
        return vec![vec![]];
    }
    let colour = refine_colours(adj);
    let mut matrix = vec![vec![false; n]; n];
    for (v, ns) in adj.iter().enumerate() {
        for &w in ns {
            matrix[v][w] = true;
        }
    }
    let mut order = vec![0usize];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
    }
    assert_eq!(order.len(), n, "graph must be connected");

    struct Search<'a> {
        adj: &'a [Vec<usize>],
        matrix: Vec<Vec<bool>>,
        colour: Vec<usize>,
        order: Vec<usize>,
        parent: Vec<usize>,
        image: Vec<usize>,
        used: Vec<bool>,
        found: Vec<Perm>,
    }

    impl Search<'_> {
        fn run(&mut self, depth: usize) {
            if depth == self.order.len() {
                self.found.push(self.image.clone());
                return;
            }
            let v = self.order[depth];
            let candidates: Vec<usize> = if depth == 0 {
                (0..self.adj.len()).collect()
            } else {
                self.adj[self.image[self.parent[v]]].clone()
            };
            for u in candidates {
                if self.used[u] || self.colour[u] != self.colour[v] {
                    continue;
                }
                let consistent = self.order[..depth]
                    .iter()
                    .all(|&x| self.matrix[v][x] == self.matrix[u][self.image[x]]);
                if !consistent {
                    continue;
                }
                self.image[v] = u;
                self.used[u] = true;
                self.run(depth + 1);
                self.used[u] = false;
            }
            self.image[v] = usize::MAX;
        }
    }

    let mut s = Search {
        adj,
        matrix,
        colour,
        order,
        parent,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        found: Vec::new(),
    };
    s.run(0);
    let mut found = s.found;
    found.sort();
    found
}

fn compose(p: &Perm, q: &Perm) -> Perm {
    q.iter().map(|&i| p[i]).collect()
}

fn element_order(p: &Perm) -> usize {
    let id: Perm = (0..p.len()).collect();
    let mut q = p.clone();
    let mut k = 1;
    while q != id {
        q = compose(p, &q);
        k += 1;
    }
    k
}

/// Isomorphism classes that occur among the Hasse graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupName {
    Trivial,
    Cyclic(usize),
    Klein,
    /// Dihedral group of order `2n`, `n >= 3`.
    Dihedral(usize),
    Symmetric4,
    Unidentified(usize),
}

impl GroupName {
    /// Dihedral group of order `2n`, folding the small cases into their usual names.
    pub fn dihedral(n: usize) -> Self {
        match n {
            1 => GroupName::Cyclic(2),
            2 => GroupName::Klein,
            _ => GroupName::Dihedral(n),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            GroupName::Trivial => 1,
            GroupName::Cyclic(n) | GroupName::Unidentified(n) => n,
            GroupName::Klein => 4,
            GroupName::Dihedral(n) => 2 * n,
            GroupName::Symmetric4 => 24,
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Trivial => write!(f, "1"),
            GroupName::Cyclic(n) => write!(f, "Z/{n}"),
            GroupName::Klein => write!(f, "Z/2 × Z/2"),
            GroupName::Dihedral(3) => write!(f, "Sym_3"),
            GroupName::Dihedral(n) => write!(f, "Dih_{n}"),
            GroupName::Symmetric4 => write!(f, "Sym_4"),
            GroupName::Unidentified(n) => write!(f, "unidentified(order={n})"),
        }
    }
}

impl Serialize for GroupName {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Invariants of a permutation group, enough to tell the catalog apart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub is_abelian: bool,
    /// Element order to number of elements of that order.
    pub element_orders: BTreeMap<usize, usize>,
    pub center_order: usize,
    pub name: GroupName,
}

impl GroupFingerprint {
    /// Fingerprint of a group given by all of its elements.
    pub fn of(elements: &[Perm]) -> Self {
        let mut element_orders = BTreeMap::new();
        for p in elements {
            *element_orders.entry(element_order(p)).or_insert(0) += 1;
        }
        let central: Vec<bool> = elements
            .iter()
            .map(|p| elements.iter().all(|q| compose(p, q) == compose(q, p)))
            .collect();
        let center_order = central.iter().filter(|&&c| c).count();
        let mut f = GroupFingerprint {
            order: elements.len(),
            is_abelian: center_order == elements.len(),
            element_orders,
            center_order,
            name: GroupName::Trivial,
        };
        f.name = identify_group(&f);
        f
    }

    fn count(&self, k: usize) -> usize {
        self.element_orders.get(&k).copied().unwrap_or(0)
    }

    fn max_element_order(&self) -> usize {
        self.element_orders.keys().copied().max().unwrap_or(1)
    }
}

/// Match a fingerprint against {1, Z/n, Z/2 × Z/2, Dih_n, Sym_4}.
pub fn identify_group(f: &GroupFingerprint) -> GroupName {
    let n = f.order;
    let max = f.max_element_order();
    if n > 48 {
        return GroupName::Unidentified(n);
    }
    if n == 1 {
        return GroupName::Trivial;
    }
    if f.is_abelian {
        if max == n {
            return GroupName::Cyclic(n);
        }
        if n == 4 && f.count(2) == 3 {
            return GroupName::Klein;
        }
        return GroupName::Unidentified(n);
    }
    if n == 24 && max == 4 && f.center_order == 1 && f.count(2) == 9 && f.count(3) == 8 && f.count(4) == 6 {
        return GroupName::Symmetric4;
    }
    if n % 2 == 0 {
        let k = n / 2;
        let involutions = k + usize::from(k % 2 == 0);
        let center = if k % 2 == 0 { 2 } else { 1 };
        if max == k && f.count(2) == involutions && f.center_order == center {
            return GroupName::Dihedral(k);
        }
    }
    GroupName::Unidentified(n)
}
