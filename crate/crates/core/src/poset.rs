//! Finite posets stored as bitset rows, with partial joins and meets, lattice
//! certificates, Birkhoff data and Hasse diagrams.

use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::text::{directives, ParseError};

/// A subset of a finite carrier, indexed by element position.
pub type Subset = FixedBitSet;

/// Builds a subset of `{0, .., n-1}` from indices.
pub fn subset_of(n: usize, items: impl IntoIterator<Item = usize>) -> Subset {
    let mut s = FixedBitSet::with_capacity(n);
    for i in items {
        s.insert(i);
    }
    s
}

/// The full subset `{0, .., n-1}`.
pub fn full_subset(n: usize) -> Subset {
    let mut s = FixedBitSet::with_capacity(n);
    s.insert_range(..);
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("empty element name")]
    EmptyName,
    #[error("cycle detected: `{0}` and `{1}` are mutually below each other")]
    CycleDetected(String, String),
    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("relation is not transitive: `{0}` <= `{1}` <= `{2}`")]
    NotTransitive(String, String, String),
    #[error("not a lattice: `{0}` and `{1}` lack a meet or a join")]
    NotALattice(String, String),
    #[error("the empty poset is not a lattice")]
    EmptyLattice,
    #[error("lattice is not distributive: witness ({0}, {1}, {2})")]
    NotDistributive(String, String, String),
}

impl PosetError {
    pub fn kind(&self) -> &'static str {
        match self {
            PosetError::DuplicateElement(_) => "DuplicateElement",
            PosetError::UnknownElement(_) => "UnknownElement",
            PosetError::EmptyName => "EmptyName",
            PosetError::CycleDetected(..) => "CycleDetected",
            PosetError::NotReflexive(_) => "NotReflexive",
            PosetError::NotTransitive(..) => "NotTransitive",
            PosetError::NotALattice(..) => "NotALattice",
            PosetError::EmptyLattice => "EmptyLattice",
            PosetError::NotDistributive(..) => "NotDistributive",
        }
    }
}

/// A finite partial order. `up[i]` holds `{j : i <= j}` and `down[i]` holds `{j : j <= i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    up: Vec<Subset>,
    down: Vec<Subset>,
}

impl FinitePoset {
    /// Reflexive-transitive closure of a cover relation. `(a, b)` means `a` is covered by `b`.
    pub fn from_covers<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self, PosetError> {
        let names = check_names(elements.iter().map(|s| s.as_ref().to_string()).collect())?;
        let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let n = names.len();
        let mut succ = vec![Vec::new(); n];
        for (a, b) in covers {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| PosetError::UnknownElement(a.as_ref().to_string()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| PosetError::UnknownElement(b.as_ref().to_string()))?;
            succ[ia].push(ib);
        }
        // depth-first reachability from every element
        let mut up = Vec::with_capacity(n);
        for start in 0..n {
            let mut seen = FixedBitSet::with_capacity(n);
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                for &w in &succ[v] {
                    if !seen.put(w) {
                        stack.push(w);
                    }
                }
            }
            up.push(seen);
        }
        for i in 0..n {
            for j in up[i].ones() {
                if j != i && up[j].contains(i) {
                    return Err(PosetError::CycleDetected(names[i].clone(), names[j].clone()));
                }
            }
        }
        Ok(Self::from_up_sets(names, up))
    }

    /// Builds a poset from an explicit order predicate, validating the partial-order axioms.
    pub fn from_relation(names: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self, PosetError> {
        let names = check_names(names)?;
        let n = names.len();
        let up: Vec<Subset> = (0..n).map(|i| subset_of(n, (0..n).filter(|&j| leq(i, j)))).collect();
        for i in 0..n {
            if !up[i].contains(i) {
                return Err(PosetError::NotReflexive(names[i].clone()));
            }
            for j in up[i].ones() {
                if j != i && up[j].contains(i) {
                    return Err(PosetError::CycleDetected(names[i].clone(), names[j].clone()));
                }
                if !up[j].is_subset(&up[i]) {
                    let k = up[j].difference(&up[i]).next().unwrap();
                    return Err(PosetError::NotTransitive(
                        names[i].clone(),
                        names[j].clone(),
                        names[k].clone(),
                    ));
                }
            }
        }
        Ok(Self::from_up_sets(names, up))
    }

    /// The poset of the given sets ordered by inclusion.
    pub fn from_subsets(names: Vec<String>, sets: &[Subset]) -> Result<Self, PosetError> {
        assert_eq!(names.len(), sets.len(), "one name per set");
        Self::from_relation(names, |i, j| sets[i].is_subset(&sets[j]))
    }

    fn from_up_sets(names: Vec<String>, up: Vec<Subset>) -> Self {
        let n = names.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                down[j].insert(i);
            }
        }
        FinitePoset { names, up, down }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn resolve(&self, name: &str) -> Result<usize, PosetError> {
        self.index_of(name)
            .ok_or_else(|| PosetError::UnknownElement(name.to_string()))
    }

    pub fn resolve_all<S: AsRef<str>>(&self, names: &[S]) -> Result<Subset, PosetError> {
        let mut s = self.empty_subset();
        for n in names {
            s.insert(self.resolve(n.as_ref())?);
        }
        Ok(s)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `{j : i <= j}`
    pub fn up(&self, i: usize) -> &Subset {
        &self.up[i]
    }

    /// `{j : j <= i}`
    pub fn down(&self, i: usize) -> &Subset {
        &self.down[i]
    }

    pub fn empty_subset(&self) -> Subset {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_subset(&self) -> Subset {
        full_subset(self.len())
    }

    pub fn upper_bounds(&self, set: &Subset) -> Subset {
        let mut ub = self.full_subset();
        for i in set.ones() {
            ub.intersect_with(&self.up[i]);
        }
        ub
    }

    pub fn lower_bounds(&self, set: &Subset) -> Subset {
        let mut lb = self.full_subset();
        for i in set.ones() {
            lb.intersect_with(&self.down[i]);
        }
        lb
    }

    /// The element of `set` below every other element of `set`, if any.
    pub fn least(&self, set: &Subset) -> Option<usize> {
        set.ones().find(|&i| set.is_subset(&self.up[i]))
    }

    pub fn greatest(&self, set: &Subset) -> Option<usize> {
        set.ones().find(|&i| set.is_subset(&self.down[i]))
    }

    /// Least upper bound of `set` when it exists.
    pub fn partial_join(&self, set: &Subset) -> Option<usize> {
        self.least(&self.upper_bounds(set))
    }

    /// Greatest lower bound of `set` when it exists.
    pub fn partial_meet(&self, set: &Subset) -> Option<usize> {
        self.greatest(&self.lower_bounds(set))
    }

    pub fn partial_join_of(&self, items: &[usize]) -> Option<usize> {
        self.partial_join(&subset_of(self.len(), items.iter().copied()))
    }

    pub fn partial_join_named<S: AsRef<str>>(&self, names: &[S]) -> Result<Option<&str>, PosetError> {
        let set = self.resolve_all(names)?;
        Ok(self.partial_join(&set).map(|i| self.name(i)))
    }

    pub fn partial_meet_named<S: AsRef<str>>(&self, names: &[S]) -> Result<Option<&str>, PosetError> {
        let set = self.resolve_all(names)?;
        Ok(self.partial_meet(&set).map(|i| self.name(i)))
    }

    pub fn bottom(&self) -> Option<usize> {
        self.least(&self.full_subset())
    }

    pub fn top(&self) -> Option<usize> {
        self.greatest(&self.full_subset())
    }

    pub fn maximal(&self, set: &Subset) -> Subset {
        subset_of(
            self.len(),
            set.ones().filter(|&i| !set.ones().any(|j| self.lt(i, j))),
        )
    }

    pub fn minimal(&self, set: &Subset) -> Subset {
        subset_of(
            self.len(),
            set.ones().filter(|&i| !set.ones().any(|j| self.lt(j, i))),
        )
    }

    pub fn down_closure(&self, set: &Subset) -> Subset {
        let mut out = self.empty_subset();
        for i in set.ones() {
            out.union_with(&self.down[i]);
        }
        out
    }

    pub fn up_closure(&self, set: &Subset) -> Subset {
        let mut out = self.empty_subset();
        for i in set.ones() {
            out.union_with(&self.up[i]);
        }
        out
    }

    pub fn is_down_set(&self, set: &Subset) -> bool {
        set.ones().all(|i| self.down[i].is_subset(set))
    }

    /// The cover relation: pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.up[a].ones() {
                if b == a {
                    continue;
                }
                let between = self.up[a].intersection(&self.down[b]).count();
                if between == 2 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Elements ordered so that `i < j` implies `i` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.down[i].count_ones(..), i));
        order
    }

    pub fn opposite(&self) -> FinitePoset {
        FinitePoset {
            names: self.names.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// The induced sub-poset on `set`; element `k` of the result is the `k`-th member of `set`.
    pub fn restrict(&self, set: &Subset) -> FinitePoset {
        let members: Vec<usize> = set.ones().collect();
        let names = members.iter().map(|&i| self.names[i].clone()).collect();
        let up = members
            .iter()
            .map(|&i| subset_of(members.len(), (0..members.len()).filter(|&k| self.leq(i, members[k]))))
            .collect();
        Self::from_up_sets(names, up)
    }

    /// Every antichain contained in `within` with at most `max_size` members (the empty one included).
    pub fn antichains(&self, within: &Subset, max_size: Option<usize>) -> Vec<Vec<usize>> {
        let items: Vec<usize> = within.ones().collect();
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.antichain_rec(&items, 0, max_size.unwrap_or(usize::MAX), &mut current, &mut out);
        out
    }

    fn antichain_rec(
        &self,
        items: &[usize],
        from: usize,
        max: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(current.clone());
        if current.len() == max {
            return;
        }
        for k in from..items.len() {
            let x = items[k];
            if current.iter().all(|&c| !self.comparable(c, x)) {
                current.push(x);
                self.antichain_rec(items, k + 1, max, current, out);
                current.pop();
            }
        }
    }

    /// All down-sets, the empty one included. Exponential in the width.
    pub fn down_sets(&self) -> Vec<Subset> {
        let order = self.linear_extension();
        let mut out = Vec::new();
        let mut current = self.empty_subset();
        self.down_set_rec(&order, 0, &mut current, &mut out);
        out.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
        out
    }

    fn down_set_rec(&self, order: &[usize], k: usize, current: &mut Subset, out: &mut Vec<Subset>) {
        if k == order.len() {
            out.push(current.clone());
            return;
        }
        let x = order[k];
        self.down_set_rec(order, k + 1, current, out);
        let mut below = self.down[x].clone();
        below.remove(x);
        if below.is_subset(current) {
            current.insert(x);
            self.down_set_rec(order, k + 1, current, out);
            current.remove(x);
        }
    }

    /// Renders a subset as `{a,b,c}` in element order.
    pub fn subset_label(&self, set: &Subset) -> String {
        let parts: Vec<&str> = set.ones().map(|i| self.name(i)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// The Dedekind-MacNeille completion: intersections of principal down-sets (the full set
    /// included), ordered by inclusion. Cuts that are principal keep the element's name.
    pub fn macneille_completion(&self) -> Lattice {
        let mut cuts: Vec<Subset> = vec![self.full_subset()];
        cuts.extend(self.down.iter().cloned());
        let mut k = 0;
        while k < cuts.len() {
            for j in 0..k {
                let mut meet = cuts[k].clone();
                meet.intersect_with(&cuts[j]);
                if !cuts.contains(&meet) {
                    cuts.push(meet);
                }
            }
            k += 1;
        }
        cuts.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
        cuts.dedup();
        let names = cuts
            .iter()
            .map(|c| match self.greatest(c) {
                Some(g) if &self.down[g] == c => self.names[g].clone(),
                _ => self.subset_label(c),
            })
            .collect();
        FinitePoset::from_subsets(names, &cuts)
            .and_then(|p| p.as_lattice())
            .expect("cuts form a complete lattice")
    }

    /// Checks that every meet and join of pairs exists.
    pub fn as_lattice(&self) -> Result<Lattice, PosetError> {
        Lattice::new(self.clone())
    }
}

fn check_names(names: Vec<String>) -> Result<Vec<String>, PosetError> {
    let mut seen = std::collections::HashSet::new();
    for n in &names {
        if n.is_empty() {
            return Err(PosetError::EmptyName);
        }
        if !seen.insert(n.as_str()) {
            return Err(PosetError::DuplicateElement(n.clone()));
        }
    }
    Ok(names)
}

/// A poset certified to be a lattice, with total meet and join tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    poset: FinitePoset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl std::ops::Deref for Lattice {
    type Target = FinitePoset;
    fn deref(&self) -> &FinitePoset {
        &self.poset
    }
}

impl Lattice {
    pub fn new(poset: FinitePoset) -> Result<Self, PosetError> {
        let n = poset.len();
        if n == 0 {
            return Err(PosetError::EmptyLattice);
        }
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let pair = subset_of(n, [a, b]);
                let (m, j) = match (poset.partial_meet(&pair), poset.partial_join(&pair)) {
                    (Some(m), Some(j)) => (m, j),
                    _ => {
                        return Err(PosetError::NotALattice(
                            poset.name(a).to_string(),
                            poset.name(b).to_string(),
                        ))
                    }
                };
                meet[a * n + b] = m;
                meet[b * n + a] = m;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }
        // a nonempty finite lattice is bounded
        let bottom = poset.bottom().expect("finite lattice has a bottom");
        let top = poset.top().expect("finite lattice has a top");
        Ok(Lattice {
            poset,
            meet,
            join,
            bottom,
            top,
        })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.poset.len() + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.poset.len() + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// First triple `(a, b, c)` in index order with `a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)`.
    pub fn distributivity_witness(&self) -> Option<[usize; 3]> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    pub fn check_distributive(&self) -> Result<(), PosetError> {
        match self.distributivity_witness() {
            None => Ok(()),
            Some([a, b, c]) => Err(PosetError::NotDistributive(
                self.name(a).to_string(),
                self.name(b).to_string(),
                self.name(c).to_string(),
            )),
        }
    }

    /// Elements `j != 0` such that `j = a ∨ b` forces `j ∈ {a, b}`.
    pub fn join_irreducible_indices(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&j| j != self.bottom)
            .filter(|&j| {
                (0..n).all(|a| (0..n).all(|b| self.join(a, b) != j || a == j || b == j))
            })
            .collect()
    }

    /// The sub-poset of join-irreducibles; its down-set lattice recovers a distributive lattice.
    pub fn join_irreducibles(&self) -> Result<FinitePoset, PosetError> {
        self.check_distributive()?;
        let set = subset_of(self.len(), self.join_irreducible_indices());
        Ok(self.poset.restrict(&set))
    }

    pub fn opposite(&self) -> Lattice {
        let n = self.len();
        Lattice {
            poset: self.poset.opposite(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
        }
        .debug_checked(n)
    }

    fn debug_checked(self, n: usize) -> Self {
        debug_assert_eq!(self.meet.len(), n * n);
        self
    }
}

/// The lattice of down-sets of `p` ordered by inclusion, with elements labelled by their members.
pub fn down_set_lattice(p: &FinitePoset) -> FinitePoset {
    let sets = p.down_sets();
    let names = sets.iter().map(|s| p.subset_label(s)).collect();
    FinitePoset::from_subsets(names, &sets).expect("down-sets are distinct")
}

/// Searches for an order isomorphism `p -> q` (exhaustive backtracking with degree pruning).
/// Exponential in the worst case; meant for posets of a couple dozen elements at most.
pub fn find_isomorphism(p: &FinitePoset, q: &FinitePoset) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() {
        return None;
    }
    let sig = |x: &FinitePoset| -> Vec<(usize, usize, usize, usize)> {
        let covers = x.covers();
        (0..x.len())
            .map(|i| {
                (
                    x.down(i).count_ones(..),
                    x.up(i).count_ones(..),
                    covers.iter().filter(|c| c.1 == i).count(),
                    covers.iter().filter(|c| c.0 == i).count(),
                )
            })
            .collect()
    };
    let sp = sig(p);
    let sq = sig(q);
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    let order = p.linear_extension();
    let mut map = vec![usize::MAX; n];
    let mut used = FixedBitSet::with_capacity(n);
    if iso_rec(p, q, &sp, &sq, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn iso_rec(
    p: &FinitePoset,
    q: &FinitePoset,
    sp: &[(usize, usize, usize, usize)],
    sq: &[(usize, usize, usize, usize)],
    order: &[usize],
    k: usize,
    map: &mut [usize],
    used: &mut FixedBitSet,
) -> bool {
    if k == order.len() {
        return true;
    }
    let x = order[k];
    for y in 0..q.len() {
        if used.contains(y) || sp[x] != sq[y] {
            continue;
        }
        let consistent = order[..k].iter().all(|&x2| {
            let y2 = map[x2];
            p.leq(x2, x) == q.leq(y2, y) && p.leq(x, x2) == q.leq(y, y2)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used.insert(y);
        if iso_rec(p, q, sp, sq, order, k + 1, map, used) {
            return true;
        }
        used.remove(y);
        map[x] = usize::MAX;
    }
    false
}

/// Order isomorphism up to element names.
pub fn iso_check(p: &FinitePoset, q: &FinitePoset) -> bool {
    find_isomorphism(p, q).is_some()
}

fn dot_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

/// DOT digraph of the cover relation with edges pointing upward. Nodes and edges are
/// sorted by name so equal posets render byte-identically.
pub fn hasse_dot(p: &FinitePoset) -> String {
    hasse_dot_named(p, "hasse")
}

pub fn hasse_dot_named(p: &FinitePoset, graph_name: &str) -> String {
    let mut nodes: Vec<&str> = p.names().iter().map(String::as_str).collect();
    nodes.sort_unstable();
    let mut edges: Vec<(&str, &str)> = p
        .covers()
        .into_iter()
        .map(|(a, b)| (p.name(a), p.name(b)))
        .collect();
    edges.sort_unstable();
    let mut out = String::new();
    writeln!(out, "digraph {} {{", dot_quote(graph_name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for n in nodes {
        writeln!(out, "  {};", dot_quote(n)).unwrap();
    }
    for (a, b) in edges {
        writeln!(out, "  {} -> {};", dot_quote(a), dot_quote(b)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Parses the `.poset` format: `elem <name>` and `cover <a> <b>` lines, `#` comments.
pub fn parse_poset(text: &str) -> Result<FinitePoset, ParseError> {
    let mut elements: Vec<String> = Vec::new();
    let mut covers: Vec<(String, String)> = Vec::new();
    let mut last_line = 0;
    for d in directives(text) {
        last_line = d.line;
        match d.keyword {
            "elem" => {
                d.expect_args(1)?;
                elements.push(d.args[0].to_string());
            }
            "cover" => {
                d.expect_args(2)?;
                covers.push((d.args[0].to_string(), d.args[1].to_string()));
            }
            other => return Err(d.error(format!("unknown directive `{other}`"))),
        }
    }
    FinitePoset::from_covers(&elements, &covers)
        .map_err(|e| ParseError::new(last_line, e.to_string()).with_kind(e.kind()))
}

/// Writes `p` in the `.poset` format (elements in index order, covers sorted).
pub fn write_poset(p: &FinitePoset) -> String {
    let mut out = String::new();
    for n in p.names() {
        writeln!(out, "elem {n}").unwrap();
    }
    let mut covers = p.covers();
    covers.sort_unstable();
    for (a, b) in covers {
        writeln!(out, "cover {} {}", p.name(a), p.name(b)).unwrap();
    }
    out
}
