//! Finite groups as Cayley tables, their endomorphism monoids, and actions on
//! finite sets.
//!
//! Elements are indices `0..n-1`. The unit index is stored explicitly rather
//! than being forced to 0, so subgroup and coset constructions never need to
//! relabel. All values are immutable after validation.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

/// Which line of a Cayley table failed the Latin-square condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Col,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is not a square table of the declared order")]
    BadShape,
    #[error("table entry at ({0}, {1}) is out of range")]
    EntryOutOfRange(usize, usize),
    #[error("unit axiom fails at element {0}")]
    BadUnit(usize),
    #[error("{0:?} {1} of the table is not a permutation")]
    NotLatin(Line, usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ActionError {
    #[error("action table is not order x set_size")]
    BadShape,
    #[error("action entry at ({0}, {1}) is out of range")]
    EntryOutOfRange(usize, usize),
    #[error("unit does not act trivially on point {0}")]
    NotUnital(usize),
    #[error("action is not compatible with multiplication at ({0}, {1}, {2})")]
    NotCompatible(usize, usize, usize),
}

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    unit: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order={}, unit={})", self.order, self.unit)
    }
}

impl FiniteGroup {
    /// Validates a multiplication table and returns the group, or the first
    /// violated axiom together with a witness.
    ///
    /// Checks run in a fixed order (shape, range, unit, Latin, associativity,
    /// inverses) so the reported failure is deterministic.
    pub fn from_table(mul: Vec<Vec<usize>>, unit: usize) -> Result<FiniteGroup, GroupError> {
        let n = mul.len();
        if n == 0 || unit >= n {
            return Err(GroupError::BadShape);
        }
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::BadShape);
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange(a, b));
                }
                flat.push(v);
            }
        }
        Self::from_flat_table(flat, n, unit)
    }

    pub(crate) fn from_flat_table(
        mul: Vec<usize>,
        order: usize,
        unit: usize,
    ) -> Result<FiniteGroup, GroupError> {
        let n = order;
        assert_eq!(mul.len(), n * n);
        for a in 0..n {
            if mul[unit * n + a] != a || mul[a * n + unit] != a {
                return Err(GroupError::BadUnit(a));
            }
        }
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                let v = mul[a * n + b];
                if seen[v] {
                    return Err(GroupError::NotLatin(Line::Row, a));
                }
                seen[v] = true;
            }
        }
        for b in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for a in 0..n {
                let v = mul[a * n + b];
                if seen[v] {
                    return Err(GroupError::NotLatin(Line::Col, b));
                }
                seen[v] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul[a * n + b];
                for c in 0..n {
                    if mul[ab * n + c] != mul[a * n + mul[b * n + c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&x| mul[a * n + x] == unit && mul[x * n + a] == unit) {
                Some(x) => inv[a] = x,
                None => return Err(GroupError::NoInverse(a)),
            }
        }
        Ok(FiniteGroup { order: n, unit, mul, inv })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// a * b * a^{-1}
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.unit {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Rows of the multiplication table, for serialization.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.mul[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }

    /// The group with the transposed table (a *' b = b * a).
    pub fn opposite(&self) -> FiniteGroup {
        let n = self.order;
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = self.mul(b, a);
            }
        }
        FiniteGroup { order: n, unit: self.unit, mul, inv: self.inv.clone() }
    }

    /// A small generating set, chosen greedily by least index.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[self.unit] = true;
        let mut span_count = 1;
        while span_count < self.order {
            let g = (0..self.order).find(|&x| !span[x]).unwrap();
            gens.push(g);
            // close the span under multiplication by the new generator set
            let mut frontier: Vec<usize> =
                (0..self.order).filter(|&x| span[x]).collect();
            while let Some(x) = frontier.pop() {
                for &h in &gens {
                    for y in [self.mul(x, h), self.mul(h, x)] {
                        if !span[y] {
                            span[y] = true;
                            span_count += 1;
                            frontier.push(y);
                        }
                    }
                }
            }
        }
        gens
    }

    /// Whether `elems` (with repeats allowed) forms a subgroup.
    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let set: HashSet<usize> = elems.iter().copied().collect();
        if !set.contains(&self.unit) || set.iter().any(|&x| x >= self.order) {
            return false;
        }
        set.iter().all(|&a| {
            set.contains(&self.inv(a)) && set.iter().all(|&b| set.contains(&self.mul(a, b)))
        })
    }
}

/// A group endomorphism stored as its value table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Endomorphism {
    map: Vec<usize>,
}

impl std::fmt::Debug for Endomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Endo{:?}", self.map)
    }
}

impl Endomorphism {
    /// Wraps a value table after checking it is multiplicative on `g`.
    pub fn new(g: &FiniteGroup, map: Vec<usize>) -> Option<Endomorphism> {
        if map.len() != g.order() || !is_endomorphism(g, &map) {
            return None;
        }
        Some(Endomorphism { map })
    }

    pub(crate) fn from_table_unchecked(map: Vec<usize>) -> Endomorphism {
        Endomorphism { map }
    }

    pub fn identity(g: &FiniteGroup) -> Endomorphism {
        Endomorphism { map: (0..g.order()).collect() }
    }

    /// The endomorphism sending everything to the unit.
    pub fn constant_unit(g: &FiniteGroup) -> Endomorphism {
        Endomorphism { map: vec![g.unit(); g.order()] }
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.map.len()];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    /// self after other: (self . other)(x) = self(other(x))
    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism { map: other.map.iter().map(|&x| self.map[x]).collect() }
    }
}

pub(crate) fn is_endomorphism(g: &FiniteGroup, map: &[usize]) -> bool {
    endomorphism_witness(g, map).is_none()
}

pub(crate) fn endomorphism_witness(g: &FiniteGroup, map: &[usize]) -> Option<(usize, usize)> {
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            if map[g.mul(a, b)] != g.mul(map[a], map[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// All endomorphisms of `g`, in lexicographic order of their value tables.
///
/// Every endomorphism is determined by its images on a generating set; the
/// search assigns those images and extends multiplicatively, so it scales to
/// groups where filtering all `n^n` maps would be hopeless.
pub fn endomorphism_monoid(g: &FiniteGroup) -> Vec<Endomorphism> {
    enumerate_endomorphisms(g, false)
}

/// All automorphisms of `g`, in lexicographic order of their value tables.
pub fn automorphism_group(g: &FiniteGroup) -> Vec<Endomorphism> {
    enumerate_endomorphisms(g, true)
}

fn enumerate_endomorphisms(g: &FiniteGroup, bijective_only: bool) -> Vec<Endomorphism> {
    let n = g.order();
    let gens = g.generators();
    // every element as a word in the generators: elem = prev * gen
    let mut word = vec![None; n];
    word[g.unit()] = Some((usize::MAX, usize::MAX));
    let mut built = vec![g.unit()];
    let mut head = 0;
    while head < built.len() {
        let x = built[head];
        head += 1;
        for (gi, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            if word[y].is_none() {
                word[y] = Some((x, gi));
                built.push(y);
            }
        }
    }

    let k = gens.len();
    let mut out = Vec::new();
    let mut images = vec![0usize; k];
    loop {
        if let Some(map) = extend_from_generator_images(g, &gens, &images, &word, &built) {
            if !bijective_only || is_bijective_table(&map) {
                out.push(Endomorphism { map });
            }
        }
        // odometer over generator image assignments
        let mut i = 0;
        loop {
            if i == k {
                out.sort();
                out.dedup();
                return out;
            }
            images[i] += 1;
            if images[i] < n {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}

fn extend_from_generator_images(
    g: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
    word: &[Option<(usize, usize)>],
    built: &[usize],
) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[g.unit()] = g.unit();
    for &x in &built[1..] {
        let (prev, gi) = word[x].unwrap();
        map[x] = g.mul(map[prev], images[gi]);
    }
    // generator images must agree with the extension and the whole map must
    // be multiplicative
    for (gi, &gen) in gens.iter().enumerate() {
        if map[gen] != images[gi] {
            return None;
        }
    }
    if is_endomorphism(g, &map) {
        Some(map)
    } else {
        None
    }
}

fn is_bijective_table(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
}

/// Reference enumerator: filters all `n^n` value tables. Only sensible for
/// small orders; kept as an independent oracle for `endomorphism_monoid`.
pub fn endomorphism_monoid_naive(g: &FiniteGroup, bijective_only: bool) -> Vec<Endomorphism> {
    let n = g.order();
    let mut out = Vec::new();
    let mut map = vec![0usize; n];
    loop {
        if is_endomorphism(g, &map) && (!bijective_only || is_bijective_table(&map)) {
            out.push(Endomorphism { map: map.clone() });
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            map[i] += 1;
            if map[i] < n {
                break;
            }
            map[i] = 0;
            if i == 0 {
                return out;
            }
        }
    }
}

/// t |-> s * t * s^{-1}
pub fn conjugation_endo(g: &FiniteGroup, s: usize) -> Endomorphism {
    Endomorphism { map: (0..g.order()).map(|t| g.conj(s, t)).collect() }
}

/// t |-> s^{-1} * t * s
pub fn conjugation_by_inverse(g: &FiniteGroup, s: usize) -> Endomorphism {
    conjugation_endo(g, g.inv(s))
}

/// A left action of a finite group on a finite set, as a full table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    group_order: usize,
    set_size: usize,
    act: Vec<usize>,
}

impl GroupAction {
    pub fn new(
        g: &FiniteGroup,
        set_size: usize,
        act: Vec<Vec<usize>>,
    ) -> Result<GroupAction, ActionError> {
        let n = g.order();
        if act.len() != n || set_size == 0 {
            return Err(ActionError::BadShape);
        }
        let mut flat = Vec::with_capacity(n * set_size);
        for (a, row) in act.iter().enumerate() {
            if row.len() != set_size {
                return Err(ActionError::BadShape);
            }
            for (x, &v) in row.iter().enumerate() {
                if v >= set_size {
                    return Err(ActionError::EntryOutOfRange(a, x));
                }
                flat.push(v);
            }
        }
        Self::from_flat(g, set_size, flat)
    }

    pub(crate) fn from_flat(
        g: &FiniteGroup,
        set_size: usize,
        act: Vec<usize>,
    ) -> Result<GroupAction, ActionError> {
        let n = g.order();
        let m = set_size;
        for x in 0..m {
            if act[g.unit() * m + x] != x {
                return Err(ActionError::NotUnital(x));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = g.mul(a, b);
                for x in 0..m {
                    if act[a * m + act[b * m + x]] != act[ab * m + x] {
                        return Err(ActionError::NotCompatible(a, b, x));
                    }
                }
            }
        }
        Ok(GroupAction { group_order: n, set_size: m, act })
    }

    /// The left translation action of a group on itself.
    pub fn translation(g: &FiniteGroup) -> GroupAction {
        let n = g.order();
        let act = (0..n).flat_map(|a| (0..n).map(move |x| (a, x))).map(|(a, x)| g.mul(a, x));
        GroupAction { group_order: n, set_size: n, act: act.collect() }
    }

    /// The action where every group element fixes every point.
    pub fn trivial(g: &FiniteGroup, set_size: usize) -> GroupAction {
        let act = (0..g.order()).flat_map(|_| 0..set_size).collect();
        GroupAction { group_order: g.order(), set_size, act }
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    #[inline]
    pub fn apply(&self, a: usize, x: usize) -> usize {
        self.act[a * self.set_size + x]
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.group_order)
            .map(|a| self.act[a * self.set_size..(a + 1) * self.set_size].to_vec())
            .collect()
    }
}

/// Orbit partition of an action: each orbit sorted ascending, orbits ordered
/// by (size, least element). The orbits are pairwise disjoint and cover the
/// whole set.
pub fn orbits(action: &GroupAction) -> Vec<Vec<usize>> {
    let m = action.set_size();
    let n = action.group_order();
    let mut seen = vec![false; m];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for x in 0..m {
        if seen[x] {
            continue;
        }
        let mut orbit = vec![x];
        seen[x] = true;
        let mut head = 0;
        while head < orbit.len() {
            let y = orbit[head];
            head += 1;
            for a in 0..n {
                let z = action.apply(a, y);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out.sort_by_key(|o| (o.len(), o[0]));
    out
}

/// Searches for a group isomorphism `g -> h`, returned as a value table.
/// Brute force over generator images; intended for small orders only.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let n = g.order();
    let gens = g.generators();
    let k = gens.len();
    let mut images = vec![0usize; k];
    let word = word_table(g, &gens);
    loop {
        if let Some(map) = extend_word_map(g, h, &gens, &images, &word) {
            if is_bijective_table(&map) && is_homomorphism_between(g, h, &map) {
                return Some(map);
            }
        }
        let mut i = 0;
        loop {
            if i == k {
                return None;
            }
            images[i] += 1;
            if images[i] < n {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}

fn word_table(g: &FiniteGroup, gens: &[usize]) -> Vec<Option<(usize, usize)>> {
    let n = g.order();
    let mut word = vec![None; n];
    word[g.unit()] = Some((usize::MAX, usize::MAX));
    let mut queue = vec![g.unit()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (gi, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            if word[y].is_none() {
                word[y] = Some((x, gi));
                queue.push(y);
            }
        }
    }
    word
}

fn extend_word_map(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
    word: &[Option<(usize, usize)>],
) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[g.unit()] = h.unit();
    // breadth-first in the same order the word table was built
    let mut queue = vec![g.unit()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (gi, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            if map[y] == usize::MAX && word[y] == Some((x, gi)) {
                map[y] = h.mul(map[x], images[gi]);
                queue.push(y);
            }
        }
    }
    for (gi, &gen) in gens.iter().enumerate() {
        if map[gen] != images[gi] {
            return None;
        }
    }
    Some(map)
}

fn is_homomorphism_between(g: &FiniteGroup, h: &FiniteGroup, map: &[usize]) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            if map[g.mul(a, b)] != h.mul(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}

pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Searches for an equivariant bijection between two transitive actions of
/// the same group. Returns `None` when either action is not transitive or no
/// isomorphism exists.
pub fn transitive_action_isomorphism(
    g: &FiniteGroup,
    a: &GroupAction,
    b: &GroupAction,
) -> Option<Vec<usize>> {
    let m = a.set_size();
    if b.set_size() != m || orbits(a).len() != 1 || orbits(b).len() != 1 {
        return None;
    }
    let n = g.order();
    // an equivariant map is determined by the image of one base point
    'candidates: for y0 in 0..m {
        let mut map = vec![usize::MAX; m];
        map[0] = y0;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for e in 0..n {
                let x2 = a.apply(e, x);
                let y2 = b.apply(e, map[x]);
                if map[x2] == usize::MAX {
                    map[x2] = y2;
                    queue.push(x2);
                } else if map[x2] != y2 {
                    continue 'candidates;
                }
            }
        }
        if is_bijective_table(&map) {
            return Some(map);
        }
    }
    None
}

pub(crate) type EndoIndex = HashMap<Vec<usize>, usize>;

/// Index lookup table for a sorted endomorphism list.
pub(crate) fn endo_index(endos: &[Endomorphism]) -> EndoIndex {
    endos.iter().enumerate().map(|(i, e)| (e.map.clone(), i)).collect()
}
