//! Finite posets: closure operators, maximal points, isomorphism search and
//! exhaustive enumeration up to isomorphism.

use std::collections::{HashMap, HashSet};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_CARRIER};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

/// A partial order on `0..n`, with a label per element.
///
/// `up[i]` is `↑i` and `down[i]` is `↓i`; both are kept so that either
/// closure is a union of precomputed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    up: Vec<Subset>,
    down: Vec<Subset>,
}

impl FinitePoset {
    /// Builds a poset from labels and a generating relation (covers or the
    /// full order). The relation is closed reflexively and transitively and
    /// then checked for antisymmetry.
    pub fn new(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge {
                size: n,
                max: MAX_CARRIER,
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateElement(l.clone()));
            }
        }
        let mut up: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::UnknownElement(format!("index {}", a.max(b))));
            }
            up[a].insert(b);
        }
        // Warshall on bit rows
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row = row.union(row_k);
                }
            }
        }
        for (a, row) in up.iter().enumerate() {
            for b in row.without(a) {
                if up[b].contains(a) {
                    return Err(Error::NotAntisymmetric(
                        labels[a].clone(),
                        labels[b].clone(),
                    ));
                }
            }
        }
        Ok(Self::from_up_rows(labels, up))
    }

    /// Same as [`FinitePoset::new`] but with the relation given by label.
    pub fn from_labeled(labels: &[&str], pairs: &[(&str, &str)]) -> Result<Self> {
        let owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| Error::UnknownElement(l.to_string()))
        };
        let idx_pairs = pairs
            .iter()
            .map(|&(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        FinitePoset::new(owned, &idx_pairs)
    }

    /// Builds a poset from an order predicate that is already known to be a
    /// partial order (used for derived orders such as inclusion of sets).
    pub(crate) fn from_leq_fn(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Self {
        let n = labels.len();
        let up = (0..n)
            .map(|a| (0..n).filter(|&b| leq(a, b)).collect())
            .collect();
        Self::from_up_rows(labels, up)
    }

    fn from_up_rows(labels: Vec<String>, up: Vec<Subset>) -> Self {
        let n = labels.len();
        let mut down = vec![Subset::EMPTY; n];
        for (a, row) in up.iter().enumerate() {
            for b in *row {
                down[b].insert(a);
            }
        }
        FinitePoset { labels, up, down }
    }

    pub fn empty() -> Self {
        FinitePoset {
            labels: vec![],
            up: vec![],
            down: vec![],
        }
    }

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_leq_fn(labels, |a, b| a <= b)
    }

    pub fn antichain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_leq_fn(labels, |a, b| a == b)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn all(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// `↑a`
    pub fn up_of(&self, a: usize) -> Subset {
        self.up[a]
    }

    /// `↓a`
    pub fn down_of(&self, a: usize) -> Subset {
        self.down[a]
    }

    /// Rejects subsets that mention indices outside the carrier.
    pub fn check_subset(&self, set: Subset) -> Result<()> {
        match set.difference(self.all()).first() {
            Some(i) => Err(Error::UnknownElement(format!("index {i}"))),
            None => Ok(()),
        }
    }

    /// `↑A` or `↓A`, after validating `A`.
    pub fn closure(&self, set: Subset, dir: Direction) -> Result<Subset> {
        self.check_subset(set)?;
        Ok(match dir {
            Direction::Up => self.up_closure(set),
            Direction::Down => self.down_closure(set),
        })
    }

    pub fn up_closure(&self, set: Subset) -> Subset {
        set.iter()
            .fold(Subset::EMPTY, |acc, i| acc.union(self.up[i]))
    }

    pub fn down_closure(&self, set: Subset) -> Subset {
        set.iter()
            .fold(Subset::EMPTY, |acc, i| acc.union(self.down[i]))
    }

    pub fn is_upset(&self, set: Subset) -> bool {
        self.up_closure(set) == set
    }

    pub fn is_downset(&self, set: Subset) -> bool {
        self.down_closure(set) == set
    }

    /// `max(A)`: members of `A` with nothing strictly above them in `A`.
    pub fn maximal(&self, set: Subset) -> Subset {
        set.iter()
            .filter(|&a| self.up[a].without(a).is_disjoint(set))
            .collect()
    }

    pub fn minimal(&self, set: Subset) -> Subset {
        set.iter()
            .filter(|&a| self.down[a].without(a).is_disjoint(set))
            .collect()
    }

    /// Validated form of [`FinitePoset::maximal`].
    pub fn maximal_points(&self, set: Subset) -> Result<Subset> {
        self.check_subset(set)?;
        Ok(self.maximal(set))
    }

    /// All upsets, in numeric order. Grows as the number of antichains.
    pub fn upsets(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        self.collect_closed(self.all(), Subset::EMPTY, Direction::Up, &mut out);
        out.sort();
        out
    }

    pub fn downsets(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        self.collect_closed(self.all(), Subset::EMPTY, Direction::Down, &mut out);
        out.sort();
        out
    }

    // Branch on a minimal (for upsets: maximal) undecided element: either it
    // is excluded, which excludes everything on its far side, or included.
    fn collect_closed(
        &self,
        undecided: Subset,
        chosen: Subset,
        dir: Direction,
        out: &mut Vec<Subset>,
    ) {
        let pick = match dir {
            Direction::Up => self.maximal(undecided).first(),
            Direction::Down => self.minimal(undecided).first(),
        };
        let Some(x) = pick else {
            out.push(chosen);
            return;
        };
        let far = match dir {
            Direction::Up => self.down[x],
            Direction::Down => self.up[x],
        };
        self.collect_closed(undecided.difference(far), chosen, dir, out);
        self.collect_closed(undecided.without(x), chosen.with(x), dir, out);
    }

    /// Covering pairs `(a, b)` with `a ⋖ b`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            let above = self.up[a].without(a);
            for b in self.minimal(above) {
                out.push((a, b));
            }
        }
        out
    }

    /// The order-dual poset (same labels, reversed order).
    pub fn dual(&self) -> FinitePoset {
        FinitePoset {
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.down[i].len());
        let mut h = vec![0; n];
        for &i in &order {
            h[i] = self.down[i]
                .without(i)
                .iter()
                .map(|j| h[j] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    fn invariants(&self) -> Vec<(usize, usize, usize)> {
        let heights = self.heights();
        (0..self.len())
            .map(|i| (heights[i], self.down[i].len(), self.up[i].len()))
            .collect()
    }

    /// Relabels `0..n` so that element `perm[r]` of `self` becomes `r`.
    pub fn permuted(&self, perm: &[usize], labels: Vec<String>) -> FinitePoset {
        FinitePoset::from_leq_fn(labels, |a, b| self.leq(perm[a], perm[b]))
    }

    /// Canonical code and the permutation achieving it.
    ///
    /// The code packs `leq(perm[r], perm[c])` for `r != c`; the maximum is taken
    /// over permutations that list elements sorted by (height, |↓x|, |↑x|).
    pub fn canonical_form(&self) -> (u128, Vec<usize>) {
        let n = self.len();
        assert!(
            n * n.saturating_sub(1) <= 128,
            "canonical codes need n <= 11"
        );
        let inv = self.invariants();
        let mut sorted: Vec<usize> = (0..n).collect();
        sorted.sort_by_key(|&i| inv[i]);
        // class of each position
        let class_of_pos: Vec<(usize, usize, usize)> = sorted.iter().map(|&i| inv[i]).collect();
        let mut best: Option<(u128, Vec<usize>)> = None;
        let mut perm = Vec::with_capacity(n);
        let mut used = Subset::EMPTY;
        self.canon_search(&inv, &class_of_pos, &mut perm, &mut used, 0, &mut best);
        best.unwrap_or((0, vec![]))
    }

    fn canon_search(
        &self,
        inv: &[(usize, usize, usize)],
        class_of_pos: &[(usize, usize, usize)],
        perm: &mut Vec<usize>,
        used: &mut Subset,
        code: u128,
        best: &mut Option<(u128, Vec<usize>)>,
    ) {
        let n = self.len();
        let r = perm.len();
        if r == n {
            if best.as_ref().is_none_or(|(c, _)| code > *c) {
                *best = Some((code, perm.clone()));
            }
            return;
        }
        for x in 0..n {
            if used.contains(x) || inv[x] != class_of_pos[r] {
                continue;
            }
            let mut c = code;
            for (q, &y) in perm.iter().enumerate() {
                c |= u128::from(self.leq(y, x)) << pair_bit(n, q, r);
                c |= u128::from(self.leq(x, y)) << pair_bit(n, r, q);
            }
            perm.push(x);
            used.insert(x);
            self.canon_search(inv, class_of_pos, perm, used, c, best);
            used.remove(x);
            perm.pop();
        }
    }
}

// Bit positions are assigned so that earlier (row, col) pairs are more
// significant; pairs are ordered by max(row, col) first so that codes of
// prefixes are comparable during the search.
fn pair_bit(n: usize, r: usize, c: usize) -> usize {
    let total = n * n.saturating_sub(1);
    let m = r.max(c);
    // pairs with both indices < m come first: m*(m-1) of them
    let offset = m * m.saturating_sub(1) + if r == m { c } else { m + r };
    total - 1 - offset
}

/// Searches for an order-isomorphism `P → Q`; `map[i]` is the image of `i`.
///
/// Backtracking over candidates with equal (height, |↓x|, |↑x|), checking
/// `leq` in both directions against every earlier assignment.
pub fn find_isomorphism(p: &FinitePoset, q: &FinitePoset) -> Option<Vec<usize>> {
    let n = p.len();
    if n != q.len() {
        return None;
    }
    let ip = p.invariants();
    let iq = q.invariants();
    let mut sp = ip.clone();
    let mut sq = iq.clone();
    sp.sort_unstable();
    sq.sort_unstable();
    if sp != sq {
        return None;
    }
    // most constrained first: small classes, then low elements
    let mut class_size: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for k in &ip {
        *class_size.entry(*k).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (class_size[&ip[i]], ip[i]));

    let mut map = vec![usize::MAX; n];
    let mut used = Subset::EMPTY;
    if assign(p, q, &ip, &iq, &order, 0, &mut map, &mut used) {
        debug_assert!(is_isomorphism(p, q, &map));
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    p: &FinitePoset,
    q: &FinitePoset,
    ip: &[(usize, usize, usize)],
    iq: &[(usize, usize, usize)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut Subset,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for y in 0..q.len() {
        if used.contains(y) || iq[y] != ip[x] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&z| p.leq(x, z) == q.leq(y, map[z]) && p.leq(z, x) == q.leq(map[z], y));
        if !consistent {
            continue;
        }
        map[x] = y;
        used.insert(y);
        if assign(p, q, ip, iq, order, depth + 1, map, used) {
            return true;
        }
        used.remove(y);
        map[x] = usize::MAX;
    }
    false
}

/// Checks that `map` is a bijection preserving and reflecting the order.
pub fn is_isomorphism(p: &FinitePoset, q: &FinitePoset, map: &[usize]) -> bool {
    let n = p.len();
    if q.len() != n || map.len() != n {
        return false;
    }
    let image: Subset = map.iter().copied().filter(|&y| y < n).collect();
    if image != q.all() {
        return false;
    }
    (0..n).all(|a| (0..n).all(|b| p.leq(a, b) == q.leq(map[a], map[b])))
}

/// One representative per isomorphism class of `n`-element posets, relabeled
/// canonically (`"0"`, `"1"`, ..) and sorted by canonical code.
pub fn enumerate_posets(n: usize, bounds: &Bounds) -> Result<Vec<FinitePoset>> {
    Bounds::check("poset enumeration size", n, bounds.poset)?;
    if n > 11 {
        return Err(Error::BoundExceeded {
            what: "poset enumeration size",
            size: n,
            bound: 11,
        });
    }
    let mut level: Vec<FinitePoset> = vec![FinitePoset::empty()];
    for k in 1..=n {
        let mut seen: HashMap<u128, FinitePoset> = HashMap::new();
        for p in &level {
            // every poset arises from a smaller one by adding a maximal element
            for below in p.downsets() {
                let ext = extend_with_maximal(p, below);
                let (code, perm) = ext.canonical_form();
                seen.entry(code)
                    .or_insert_with(|| canonical_relabel(&ext, &perm));
            }
        }
        let mut next: Vec<(u128, FinitePoset)> = seen.into_iter().collect();
        next.sort_by_key(|(c, _)| *c);
        level = next.into_iter().map(|(_, p)| p).collect();
        debug_assert!(level.iter().all(|p| p.len() == k));
    }
    Ok(level)
}

fn extend_with_maximal(p: &FinitePoset, below: Subset) -> FinitePoset {
    let k = p.len();
    let labels = (0..=k).map(|i| i.to_string()).collect();
    FinitePoset::from_leq_fn(labels, |a, b| match (a == k, b == k) {
        (false, false) => p.leq(a, b),
        (false, true) => below.contains(a),
        (true, false) => false,
        (true, true) => true,
    })
}

fn canonical_relabel(p: &FinitePoset, perm: &[usize]) -> FinitePoset {
    let labels = (0..p.len()).map(|i| i.to_string()).collect();
    p.permuted(perm, labels)
}
