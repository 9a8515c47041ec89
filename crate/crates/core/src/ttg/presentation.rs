use std::collections::BTreeMap;

use crate::poset::{subset_of, Subset};

use super::TtgError;

/// Raw tables as read from a file or built by a model, before validation. Objects are
/// referred to by position in `objects`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PresentationData {
    pub objects: Vec<String>,
    pub unit: Option<usize>,
    pub zero: Option<usize>,
    /// `(a, b, a ⊗ b)`; one orientation per unordered pair suffices.
    pub tensor: Vec<(usize, usize, usize)>,
    /// `(a, Σa)`; undeclared objects shift to themselves.
    pub shift: Vec<(usize, usize)>,
    pub triangles: Vec<[usize; 3]>,
    /// `(a, b)`: `a` is a direct summand of `b`.
    pub summands: Vec<(usize, usize)>,
    /// `(members, coproduct)` with members as a multiset.
    pub coproducts: Vec<(Vec<usize>, usize)>,
}

impl PresentationData {
    pub fn new<S: AsRef<str>>(objects: &[S]) -> Self {
        PresentationData {
            objects: objects.iter().map(|s| s.as_ref().to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn index(&self, name: &str) -> Result<usize, TtgError> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| TtgError::UnknownObject(name.to_string()))
    }
}

/// A validated finite tensor-triangulated presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TTPresentation {
    names: Vec<String>,
    unit: usize,
    zero: usize,
    tensor: Vec<Vec<usize>>,
    shift: Vec<usize>,
    unshift: Vec<usize>,
    triangles: Vec<[usize; 3]>,
    /// `summands_of[b]`: every `a` that is a direct summand of `b` (reflexive-transitive).
    summands_of: Vec<Subset>,
    /// Sorted member multisets and their coproducts.
    coproducts: BTreeMap<Vec<usize>, usize>,
    /// `powers[x]`: `{x^n : n >= 1}`.
    powers: Vec<Subset>,
}

/// Every violation of the presentation invariants, in a fixed order.
pub fn validate_presentation(data: &PresentationData) -> Vec<String> {
    let (tensor, mut violations) = tensor_table(data);
    let n = data.objects.len();
    let mut seen = std::collections::HashSet::new();
    for o in &data.objects {
        if !seen.insert(o) {
            violations.push(format!("duplicate object `{o}`"));
        }
    }
    let name = |i: usize| data.objects[i].as_str();
    let (Some(unit), Some(zero)) = (data.unit, data.zero) else {
        if data.unit.is_none() {
            violations.push("no unit declared".into());
        }
        if data.zero.is_none() {
            violations.push("no zero declared".into());
        }
        return violations;
    };
    if let Some(t) = &tensor {
        for x in 0..n {
            if t[unit][x] != x {
                violations.push(format!("unit law fails: {} ⊗ {} = {}", name(unit), name(x), name(t[unit][x])));
            }
            if t[x][zero] != zero {
                violations.push(format!("zero is not absorbing: {} ⊗ {} = {}", name(x), name(zero), name(t[x][zero])));
            }
        }
        'assoc: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if t[t[a][b]][c] != t[a][t[b][c]] {
                        violations.push(format!("tensor is not associative at ({}, {}, {})", name(a), name(b), name(c)));
                        break 'assoc;
                    }
                }
            }
        }
    }

    let shift = shift_table(data, &mut violations);
    let mut hit = vec![false; n];
    for &s in &shift {
        hit[s] = true;
    }
    if hit.iter().any(|h| !h) {
        violations.push("shift is not a bijection".into());
    }
    if shift[zero] != zero {
        violations.push("shift does not fix zero".into());
    }

    for tri in &data.triangles {
        if tri.iter().any(|&x| x >= n) {
            violations.push("triangle references an undeclared object".into());
        }
    }
    for &(a, b) in &data.summands {
        if a >= n || b >= n {
            violations.push("summand references an undeclared object".into());
        }
    }

    let mut coproducts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for (members, c) in &data.coproducts {
        if members.is_empty() {
            violations.push(format!("empty coproduct declared for {}", name(*c)));
            continue;
        }
        let mut key = members.clone();
        key.sort_unstable();
        if let Some(prev) = coproducts.insert(key.clone(), *c) {
            if prev != *c {
                violations.push(format!("coproduct of {} declared as both {} and {}", multiset_label(data, &key), name(prev), name(*c)));
            }
        }
    }
    for (key, &c) in &coproducts {
        if key.len() == 1 && key[0] != c {
            violations.push(format!("singleton coproduct of {} is {}", name(key[0]), name(c)));
        }
        if key.len() < 3 {
            continue;
        }
        for part in sub_multisets(key) {
            if part.len() < 2 || part.len() == key.len() {
                continue;
            }
            let Some(&inner) = coproducts.get(&part) else { continue };
            let mut rest = multiset_difference(key, &part);
            rest.push(inner);
            rest.sort_unstable();
            if let Some(&outer) = coproducts.get(&rest) {
                if outer != c {
                    violations.push(format!("coproduct is not associative at {}", multiset_label(data, key)));
                }
            }
        }
    }
    if let Some(t) = &tensor {
        for (key, &c) in &coproducts {
            for y in 0..n {
                let mut tensored: Vec<usize> = key.iter().map(|&m| t[m][y]).collect();
                tensored.sort_unstable();
                if let Some(&d) = coproducts.get(&tensored) {
                    if d != t[c][y] {
                        violations.push(format!(
                            "tensoring with {} does not preserve the coproduct {}",
                            name(y),
                            multiset_label(data, key)
                        ));
                    }
                }
            }
        }
    }
    violations
}

fn multiset_label(data: &PresentationData, key: &[usize]) -> String {
    let parts: Vec<&str> = key.iter().map(|&i| data.objects[i].as_str()).collect();
    format!("[{}]", parts.join(","))
}

fn sub_multisets(key: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << key.len())
        .map(|mask| (0..key.len()).filter(|&i| mask >> i & 1 == 1).map(|i| key[i]).collect())
        .collect();
    out.sort();
    out.dedup();
    out
}

fn multiset_difference(key: &[usize], part: &[usize]) -> Vec<usize> {
    let mut rest = key.to_vec();
    for p in part {
        let pos = rest.iter().position(|r| r == p).expect("sub-multiset");
        rest.remove(pos);
    }
    rest
}

/// Fills the symmetric table; reports conflicts and gaps.
fn tensor_table(data: &PresentationData) -> (Option<Vec<Vec<usize>>>, Vec<String>) {
    let n = data.objects.len();
    let name = |i: usize| data.objects[i].as_str();
    let mut violations = Vec::new();
    let mut t = vec![vec![usize::MAX; n]; n];
    for &(a, b, c) in &data.tensor {
        if a >= n || b >= n || c >= n {
            violations.push("tensor entry references an undeclared object".into());
            continue;
        }
        for (x, y) in [(a, b), (b, a)] {
            if t[x][y] != usize::MAX && t[x][y] != c {
                violations.push(format!("{} ⊗ {} declared as both {} and {}", name(x), name(y), name(t[x][y]), name(c)));
            }
            t[x][y] = c;
        }
    }
    // the unit and zero laws determine their rows when left implicit
    if let Some(u) = data.unit.filter(|&u| u < n) {
        for x in 0..n {
            if t[u][x] == usize::MAX {
                t[u][x] = x;
                t[x][u] = x;
            }
        }
    }
    if let Some(z) = data.zero.filter(|&z| z < n) {
        for x in 0..n {
            if t[z][x] == usize::MAX {
                t[z][x] = z;
                t[x][z] = z;
            }
        }
    }
    let mut complete = true;
    for a in 0..n {
        for b in a..n {
            if t[a][b] == usize::MAX {
                violations.push(format!("tensor table has no entry for {} ⊗ {}", name(a), name(b)));
                complete = false;
            }
        }
    }
    (complete.then_some(t), violations)
}

fn shift_table(data: &PresentationData, violations: &mut Vec<String>) -> Vec<usize> {
    let n = data.objects.len();
    let mut shift: Vec<usize> = (0..n).collect();
    let mut declared = vec![false; n];
    for &(a, b) in &data.shift {
        if a >= n || b >= n {
            violations.push("shift references an undeclared object".into());
            continue;
        }
        if declared[a] && shift[a] != b {
            violations.push(format!("shift of {} declared twice", data.objects[a]));
        }
        declared[a] = true;
        shift[a] = b;
    }
    shift
}

impl TTPresentation {
    pub fn new(data: PresentationData) -> Result<Self, TtgError> {
        let violations = validate_presentation(&data);
        if !violations.is_empty() {
            return Err(TtgError::ValidationFailure(violations));
        }
        let n = data.objects.len();
        let tensor = tensor_table(&data).0.expect("validated");
        let shift = shift_table(&data, &mut Vec::new());
        let mut unshift = vec![0; n];
        for (a, &b) in shift.iter().enumerate() {
            unshift[b] = a;
        }
        let mut coproducts = BTreeMap::new();
        let mut summand_pairs = data.summands.clone();
        for (members, c) in &data.coproducts {
            let mut key = members.clone();
            key.sort_unstable();
            // members of a coproduct are direct summands of it
            summand_pairs.extend(key.iter().map(|&m| (m, *c)));
            coproducts.insert(key, *c);
        }
        let mut summands_of: Vec<Subset> = (0..n).map(|b| subset_of(n, [b])).collect();
        for &(a, b) in &summand_pairs {
            summands_of[b].insert(a);
        }
        loop {
            let mut changed = false;
            for b in 0..n {
                let mut acc = summands_of[b].clone();
                for a in summands_of[b].ones() {
                    acc.union_with(&summands_of[a]);
                }
                if acc != summands_of[b] {
                    summands_of[b] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let powers = (0..n)
            .map(|x| {
                let mut set = subset_of(n, [x]);
                let mut p = x;
                loop {
                    p = tensor[p][x];
                    if set.contains(p) {
                        break set;
                    }
                    set.insert(p);
                }
            })
            .collect();
        Ok(TTPresentation {
            names: data.objects,
            unit: data.unit.expect("validated"),
            zero: data.zero.expect("validated"),
            tensor,
            shift,
            unshift,
            triangles: data.triangles,
            summands_of,
            coproducts,
            powers,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index(&self, name: &str) -> Result<usize, TtgError> {
        self.names
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| TtgError::UnknownObject(name.to_string()))
    }

    pub fn resolve_all<S: AsRef<str>>(&self, names: &[S]) -> Result<Subset, TtgError> {
        let mut set = self.empty_set();
        for n in names {
            set.insert(self.index(n.as_ref())?);
        }
        Ok(set)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn tensor(&self, a: usize, b: usize) -> usize {
        self.tensor[a][b]
    }

    pub fn shift(&self, a: usize) -> usize {
        self.shift[a]
    }

    pub fn unshift(&self, a: usize) -> usize {
        self.unshift[a]
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn summands_of(&self, b: usize) -> &Subset {
        &self.summands_of[b]
    }

    pub fn coproducts(&self) -> &BTreeMap<Vec<usize>, usize> {
        &self.coproducts
    }

    pub fn powers(&self, x: usize) -> &Subset {
        &self.powers[x]
    }

    pub fn empty_set(&self) -> Subset {
        subset_of(self.len(), [])
    }

    pub fn all_objects(&self) -> Subset {
        subset_of(self.len(), 0..self.len())
    }

    pub fn label(&self, set: &Subset) -> String {
        let parts: Vec<&str> = set.ones().map(|i| self.name(i)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Back to raw tables, with tensor entries for `a <= b` only and implicit identities dropped.
    pub fn to_data(&self) -> PresentationData {
        let n = self.len();
        let mut tensor = Vec::new();
        for a in 0..n {
            for b in a..n {
                tensor.push((a, b, self.tensor[a][b]));
            }
        }
        let mut summands = Vec::new();
        for b in 0..n {
            for a in self.summands_of[b].ones() {
                if a != b {
                    summands.push((a, b));
                }
            }
        }
        PresentationData {
            objects: self.names.clone(),
            unit: Some(self.unit),
            zero: Some(self.zero),
            tensor,
            shift: (0..n).filter(|&a| self.shift[a] != a).map(|a| (a, self.shift[a])).collect(),
            triangles: self.triangles.clone(),
            summands,
            coproducts: self.coproducts.iter().map(|(k, &c)| (k.clone(), c)).collect(),
        }
    }

    /// The presentation restricted to `sub`: tables on `sub`, triangles and coproducts with
    /// every entry in `sub`. Requires `sub` to contain the unit and zero and be closed under
    /// tensor and shift.
    pub fn restrict(&self, sub: &Subset) -> Result<(TTPresentation, Vec<usize>), TtgError> {
        let members: Vec<usize> = sub.ones().collect();
        let pos = |x: usize| members.iter().position(|&m| m == x);
        let mut data = PresentationData::new(&members.iter().map(|&m| self.name(m)).collect::<Vec<_>>());
        data.unit = pos(self.unit);
        data.zero = pos(self.zero);
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate().skip(i) {
                let c = pos(self.tensor[a][b]).ok_or_else(|| {
                    TtgError::HypothesisViolated(format!("{} ⊗ {} leaves the sub-objects", self.name(a), self.name(b)))
                })?;
                data.tensor.push((i, j, c));
            }
            let s = pos(self.shift[a])
                .ok_or_else(|| TtgError::HypothesisViolated(format!("shift of {} leaves the sub-objects", self.name(a))))?;
            if s != i {
                data.shift.push((i, s));
            }
            for s in self.summands_of[a].ones() {
                if let Some(k) = pos(s) {
                    if k != i {
                        data.summands.push((k, i));
                    }
                }
            }
        }
        for tri in &self.triangles {
            if let (Some(x), Some(y), Some(z)) = (pos(tri[0]), pos(tri[1]), pos(tri[2])) {
                data.triangles.push([x, y, z]);
            }
        }
        for (key, &c) in &self.coproducts {
            let mapped: Option<Vec<usize>> = key.iter().map(|&m| pos(m)).collect();
            if let (Some(mapped), Some(c)) = (mapped, pos(c)) {
                data.coproducts.push((mapped, c));
            }
        }
        if data.unit.is_none() || data.zero.is_none() {
            return Err(TtgError::HypothesisViolated("sub-objects must contain the unit and zero".into()));
        }
        Ok((TTPresentation::new(data)?, members))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> PresentationData {
        let mut d = PresentationData::new(&["0", "x", "1"]);
        d.zero = Some(0);
        d.unit = Some(2);
        d.tensor.push((1, 1, 1));
        d
    }

    #[test]
    fn implicit_unit_and_zero_rows() {
        let t = TTPresentation::new(tiny()).unwrap();
        assert_eq!(t.tensor(1, 2), 1);
        assert_eq!(t.tensor(0, 1), 0);
        assert_eq!(t.powers(1).count_ones(..), 1);
    }

    #[test]
    fn violations_are_listed() {
        let mut d = tiny();
        d.tensor.clear();
        let v = validate_presentation(&d);
        assert!(v.iter().any(|m| m.contains("no entry for x ⊗ x")), "{v:?}");

        let mut d = tiny();
        d.tensor.push((1, 1, 0));
        assert!(validate_presentation(&d).iter().any(|m| m.contains("declared as both")));

        let mut d = tiny();
        d.shift.push((1, 2));
        let v = validate_presentation(&d);
        assert!(v.iter().any(|m| m == "shift is not a bijection"), "{v:?}");

        let mut d = tiny();
        d.unit = None;
        assert!(validate_presentation(&d).contains(&"no unit declared".to_string()));

        let mut d = tiny();
        d.tensor.push((2, 1, 0));
        assert!(validate_presentation(&d).iter().any(|m| m.starts_with("unit law fails")));
    }

    #[test]
    fn coproduct_members_become_summands() {
        let mut d = tiny();
        d.coproducts.push((vec![1, 2], 2));
        d.coproducts.push((vec![1, 1], 1));
        let t = TTPresentation::new(d).unwrap();
        assert!(t.summands_of(2).contains(1));
    }

    #[test]
    fn conflicting_coproducts() {
        let mut d = tiny();
        d.coproducts.push((vec![1, 2], 2));
        d.coproducts.push((vec![2, 1], 1));
        assert!(TTPresentation::new(d).is_err());
    }
}
