//! Skew braces: two group structures on one carrier tied together by the
//! distributivity law
//!
//! ```text
//! a o (b . c) = (a o b) . a^{-1} . (a o c)
//! ```
//!
//! where `o` and `.` are the two products and `a^{-1}` is the dot-inverse.
//! Exhaustive validation, the lambda/rho translation maps, canonical
//! constructions, and enumeration of all skew braces on a fixed dot group.

use thiserror::Error;

use crate::group::{
    automorphism_group, is_endomorphism, Endomorphism, FiniteGroup, GroupError,
};

const ENUMERATION_ORDER_BOUND: usize = 8;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BraceError {
    #[error("the two group structures have different orders")]
    OrderMismatch,
    #[error("the two group structures have different units")]
    UnitMismatch,
    #[error("distributivity fails at ({0}, {1}, {2})")]
    DistributivityFailed(usize, usize, usize),
    #[error("group structure invalid: {0}")]
    Group(#[from] GroupError),
    #[error("translation maps violate their structure laws at element {0}")]
    InternalLemmaViolation(usize),
    #[error("order {0} exceeds the enumeration bound {1}")]
    OrderTooLarge(usize, usize),
}

/// The translation maps of a skew brace:
/// `lambda_a(b) = a^{-1} . (a o b)` and `rho_a(b) = (a o b) . a^{-1}`.
///
/// Both families consist of dot-automorphisms and both are multiplicative in
/// the circ product; this is verified at construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaRho {
    order: usize,
    lambda: Vec<usize>,
    rho: Vec<usize>,
    lambda_inv: Vec<usize>,
    rho_inv: Vec<usize>,
}

impl LambdaRho {
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.lambda[a * self.order + b]
    }

    #[inline]
    pub fn rho(&self, a: usize, b: usize) -> usize {
        self.rho[a * self.order + b]
    }

    /// lambda_a^{-1}(b), the inverse permutation applied to b.
    #[inline]
    pub fn lambda_inv(&self, a: usize, b: usize) -> usize {
        self.lambda_inv[a * self.order + b]
    }

    /// rho_a^{-1}(b), the inverse permutation applied to b.
    #[inline]
    pub fn rho_inv(&self, a: usize, b: usize) -> usize {
        self.rho_inv[a * self.order + b]
    }

    pub fn lambda_endo(&self, a: usize) -> Endomorphism {
        Endomorphism::from_table_unchecked(
            self.lambda[a * self.order..(a + 1) * self.order].to_vec(),
        )
    }

    pub fn rho_endo(&self, a: usize) -> Endomorphism {
        Endomorphism::from_table_unchecked(self.rho[a * self.order..(a + 1) * self.order].to_vec())
    }
}

/// One carrier set with two interacting group structures.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewBrace {
    circ: FiniteGroup,
    dot: FiniteGroup,
    maps: LambdaRho,
}

impl std::fmt::Debug for SkewBrace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SkewBrace(order={})", self.order())
    }
}

impl SkewBrace {
    /// Validates the distributivity law on all triples and builds the brace.
    pub fn new(circ: FiniteGroup, dot: FiniteGroup) -> Result<SkewBrace, BraceError> {
        if circ.order() != dot.order() {
            return Err(BraceError::OrderMismatch);
        }
        if circ.unit() != dot.unit() {
            return Err(BraceError::UnitMismatch);
        }
        if let Some((a, b, c)) = distributivity_witness(&circ, &dot) {
            return Err(BraceError::DistributivityFailed(a, b, c));
        }
        let maps = translation_maps(&circ, &dot)?;
        Ok(SkewBrace { circ, dot, maps })
    }

    /// The brace with both products equal to the given group product.
    pub fn trivial(g: &FiniteGroup) -> SkewBrace {
        SkewBrace::new(g.clone(), g.clone()).expect("a group is a skew brace over itself")
    }

    /// Replaces the dot structure by its opposite; always a skew brace again.
    pub fn opposite(&self) -> SkewBrace {
        SkewBrace::new(self.circ.clone(), self.dot.opposite())
            .expect("the opposite dot structure is a skew brace")
    }

    pub fn order(&self) -> usize {
        self.circ.order()
    }

    pub fn unit(&self) -> usize {
        self.circ.unit()
    }

    pub fn circ(&self) -> &FiniteGroup {
        &self.circ
    }

    pub fn dot(&self) -> &FiniteGroup {
        &self.dot
    }

    pub fn maps(&self) -> &LambdaRho {
        &self.maps
    }

    #[inline]
    pub fn circ_mul(&self, a: usize, b: usize) -> usize {
        self.circ.mul(a, b)
    }

    #[inline]
    pub fn dot_mul(&self, a: usize, b: usize) -> usize {
        self.dot.mul(a, b)
    }

    /// Circ-inverse, conventionally written with a bar.
    #[inline]
    pub fn bar(&self, a: usize) -> usize {
        self.circ.inv(a)
    }

    #[inline]
    pub fn dot_inv(&self, a: usize) -> usize {
        self.dot.inv(a)
    }
}

fn distributivity_witness(
    circ: &FiniteGroup,
    dot: &FiniteGroup,
) -> Option<(usize, usize, usize)> {
    let n = circ.order();
    for a in 0..n {
        let ainv = dot.inv(a);
        for b in 0..n {
            let ab = circ.mul(a, b);
            let left = dot.mul(ab, ainv);
            for c in 0..n {
                if circ.mul(a, dot.mul(b, c)) != dot.mul(left, circ.mul(a, c)) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Builds lambda/rho and verifies the structure laws they are guaranteed to
/// satisfy over a valid brace: each map is a dot-automorphism, and both
/// families are multiplicative in circ.
fn translation_maps(circ: &FiniteGroup, dot: &FiniteGroup) -> Result<LambdaRho, BraceError> {
    let n = circ.order();
    let mut lambda = vec![0; n * n];
    let mut rho = vec![0; n * n];
    for a in 0..n {
        let ainv = dot.inv(a);
        for b in 0..n {
            let ab = circ.mul(a, b);
            lambda[a * n + b] = dot.mul(ainv, ab);
            rho[a * n + b] = dot.mul(ab, ainv);
        }
    }
    for a in 0..n {
        let la = &lambda[a * n..(a + 1) * n];
        let ra = &rho[a * n..(a + 1) * n];
        if !is_endomorphism(dot, la) || !is_endomorphism(dot, ra) {
            return Err(BraceError::InternalLemmaViolation(a));
        }
        for b in 0..n {
            let ab = circ.mul(a, b);
            for c in 0..n {
                if lambda[ab * n + c] != lambda[a * n + lambda[b * n + c]]
                    || rho[ab * n + c] != rho[a * n + rho[b * n + c]]
                {
                    return Err(BraceError::InternalLemmaViolation(a));
                }
            }
        }
    }
    let mut lambda_inv = vec![usize::MAX; n * n];
    let mut rho_inv = vec![usize::MAX; n * n];
    for a in 0..n {
        for b in 0..n {
            let lb = lambda[a * n + b];
            let rb = rho[a * n + b];
            if lambda_inv[a * n + lb] != usize::MAX || rho_inv[a * n + rb] != usize::MAX {
                return Err(BraceError::InternalLemmaViolation(a));
            }
            lambda_inv[a * n + lb] = b;
            rho_inv[a * n + rb] = b;
        }
    }
    Ok(LambdaRho { order: n, lambda, rho, lambda_inv, rho_inv })
}

/// The skew brace on the symmetric group S3 (fixture encoding, see
/// [`crate::catalog`]) whose circ structure is cyclic of order 6 generated by
/// the transposition (12).
pub fn s3_brace() -> SkewBrace {
    let dot = crate::catalog::symmetric_3();
    // lambda is trivial on even permutations and conjugation by (23) on odd
    // ones; circ is recovered from a o b = a . lambda_a(b).
    let ad23 = crate::group::conjugation_endo(&dot, 2);
    let n = dot.order();
    let mut circ_rows = vec![vec![0usize; n]; n];
    for a in 0..n {
        let odd = matches!(a, 1..=3);
        for b in 0..n {
            let lb = if odd { ad23.apply(b) } else { b };
            circ_rows[a][b] = dot.mul(a, lb);
        }
    }
    let circ = FiniteGroup::from_table(circ_rows, dot.unit()).unwrap();
    SkewBrace::new(circ, dot).unwrap()
}

/// All circ tables on the carrier of `dot` (with the same unit) that make a
/// skew brace together with `dot`, in lexicographic table order.
///
/// Depth-first over rows of the circ table. A candidate row for element `a`
/// must fix the unit column, satisfy the distributivity law (which involves
/// only row `a`), and respect the column Latin constraint; associativity is
/// enforced by composing placed rows, which also forces rows at products of
/// placed elements.
pub fn enumerate_skew_braces(dot: &FiniteGroup) -> Result<Vec<SkewBrace>, BraceError> {
    enumerate_skew_braces_bounded(dot, ENUMERATION_ORDER_BOUND)
}

pub fn enumerate_skew_braces_bounded(
    dot: &FiniteGroup,
    bound: usize,
) -> Result<Vec<SkewBrace>, BraceError> {
    let n = dot.order();
    if n > bound {
        return Err(BraceError::OrderTooLarge(n, bound));
    }
    let unit = dot.unit();
    // rows valid in isolation: row[unit] = a, row is a permutation, and
    // distributivity holds for this row against the dot structure
    let candidates: Vec<Vec<Vec<usize>>> =
        (0..n).map(|a| valid_rows_for(dot, a)).collect();

    let mut placed: Vec<Option<Vec<usize>>> = vec![None; n];
    placed[unit] = Some((0..n).collect());
    let mut out = Vec::new();
    search_rows(dot, &candidates, &mut placed, &mut out);
    let mut braces = Vec::with_capacity(out.len());
    for table in out {
        let circ = FiniteGroup::from_flat_table(table, n, unit)?;
        braces.push(SkewBrace::new(circ, dot.clone())?);
    }
    braces.sort_by_key(|x| x.circ.table_rows());
    Ok(braces)
}

fn valid_rows_for(dot: &FiniteGroup, a: usize) -> Vec<Vec<usize>> {
    let n = dot.order();
    let unit = dot.unit();
    if a == unit {
        return vec![(0..n).collect()];
    }
    let mut rows = Vec::new();
    let mut row = vec![usize::MAX; n];
    row[unit] = a;
    let positions: Vec<usize> = (0..n).filter(|&x| x != unit).collect();
    let values: Vec<usize> = (0..n).filter(|&v| v != a).collect();
    permute_into(&positions, &values, &mut row, &mut |row| {
        if row_distributive(dot, a, row) {
            rows.push(row.to_vec());
        }
    });
    rows.sort();
    rows
}

fn permute_into(
    positions: &[usize],
    values: &[usize],
    row: &mut [usize],
    emit: &mut impl FnMut(&[usize]),
) {
    fn rec(
        positions: &[usize],
        depth: usize,
        used: &mut [bool],
        values: &[usize],
        row: &mut [usize],
        emit: &mut impl FnMut(&[usize]),
    ) {
        if depth == positions.len() {
            emit(row);
            return;
        }
        for (i, &v) in values.iter().enumerate() {
            if used[i] {
                continue;
            }
            used[i] = true;
            row[positions[depth]] = v;
            rec(positions, depth + 1, used, values, row, emit);
            used[i] = false;
        }
    }
    let mut used = vec![false; values.len()];
    rec(positions, 0, &mut used, values, row, emit);
}

/// Distributivity restricted to one circ row:
/// `row[b . c] = (row[b] . a^{-1}) . row[c]` for all b, c.
fn row_distributive(dot: &FiniteGroup, a: usize, row: &[usize]) -> bool {
    let n = dot.order();
    let ainv = dot.inv(a);
    for b in 0..n {
        let left = dot.mul(row[b], ainv);
        for c in 0..n {
            if row[dot.mul(b, c)] != dot.mul(left, row[c]) {
                return false;
            }
        }
    }
    true
}

fn search_rows(
    dot: &FiniteGroup,
    candidates: &[Vec<Vec<usize>>],
    placed: &mut Vec<Option<Vec<usize>>>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = dot.order();
    let next = (0..n).find(|&a| placed[a].is_none());
    let Some(next) = next else {
        // all rows placed; associativity was enforced incrementally but the
        // constructor re-validates everything anyway
        let mut flat = Vec::with_capacity(n * n);
        for row in placed.iter() {
            flat.extend_from_slice(row.as_ref().unwrap());
        }
        out.push(flat);
        return;
    };
    'candidate: for row in &candidates[next] {
        // column Latin constraint against already placed rows
        for other in placed.iter().flatten() {
            for x in 0..n {
                if other[x] == row[x] {
                    continue 'candidate;
                }
            }
        }
        let mut trail: Vec<usize> = Vec::new();
        placed[next] = Some(row.clone());
        trail.push(next);
        if close_associativity(dot, candidates, placed, &mut trail) {
            search_rows(dot, candidates, placed, out);
        }
        for a in trail {
            placed[a] = None;
        }
    }
}

/// Enforces `row[u o v] = row_u . row_v` (as map composition) for all placed
/// u, v: checks it when the target row exists, otherwise forces the target
/// row and validates it against its candidate constraints. Returns false on
/// contradiction; placements made here are appended to `trail`.
fn close_associativity(
    dot: &FiniteGroup,
    candidates: &[Vec<Vec<usize>>],
    placed: &mut [Option<Vec<usize>>],
    trail: &mut Vec<usize>,
) -> bool {
    let n = dot.order();
    loop {
        let mut progressed = false;
        for u in 0..n {
            let Some(row_u) = placed[u].clone() else { continue };
            for v in 0..n {
                if placed[v].is_none() {
                    continue;
                }
                let uv = row_u[v];
                let composed: Vec<usize> = {
                    let row_v = placed[v].as_ref().unwrap();
                    (0..n).map(|c| row_u[row_v[c]]).collect()
                };
                match &placed[uv] {
                    Some(existing) => {
                        if *existing != composed {
                            return false;
                        }
                    }
                    None => {
                        if !candidates[uv].contains(&composed) {
                            return false;
                        }
                        for other in placed.iter().flatten() {
                            for x in 0..n {
                                if other[x] == composed[x] {
                                    return false;
                                }
                            }
                        }
                        placed[uv] = Some(composed);
                        trail.push(uv);
                        progressed = true;
                    }
                }
            }
        }
        if !progressed {
            return true;
        }
    }
}

/// Reference enumerator: generates every Cayley table with the given unit by
/// Latin-square backtracking, keeps the associative ones, and filters by the
/// distributivity law. Independent of the pruned search; small orders only.
pub fn enumerate_skew_braces_naive(
    dot: &FiniteGroup,
    bound: usize,
) -> Result<Vec<SkewBrace>, BraceError> {
    let n = dot.order();
    if n > bound {
        return Err(BraceError::OrderTooLarge(n, bound));
    }
    let unit = dot.unit();
    let mut table = vec![usize::MAX; n * n];
    for x in 0..n {
        table[unit * n + x] = x;
        table[x * n + unit] = x;
    }
    let free: Vec<usize> = (0..n * n)
        .filter(|i| i / n != unit && i % n != unit)
        .collect();
    let mut out = Vec::new();
    fill_latin(&mut table, n, &free, 0, &mut |table| {
        if let Ok(circ) = FiniteGroup::from_flat_table(table.to_vec(), n, unit) {
            if let Ok(brace) = SkewBrace::new(circ, dot.clone()) {
                out.push(brace);
            }
        }
    });
    out.sort_by_key(|x| x.circ.table_rows());
    Ok(out)
}

fn fill_latin(
    table: &mut Vec<usize>,
    n: usize,
    free: &[usize],
    depth: usize,
    emit: &mut impl FnMut(&[usize]),
) {
    if depth == free.len() {
        emit(table);
        return;
    }
    let cell = free[depth];
    let (r, c) = (cell / n, cell % n);
    'values: for v in 0..n {
        for x in 0..n {
            if table[r * n + x] == v || table[x * n + c] == v {
                continue 'values;
            }
        }
        table[cell] = v;
        fill_latin(table, n, free, depth + 1, emit);
        table[cell] = usize::MAX;
    }
}

/// A carrier bijection that is simultaneously an isomorphism for both
/// products. Brute force over circ-generator images; small orders only.
pub fn find_brace_isomorphism(x: &SkewBrace, y: &SkewBrace) -> Option<Vec<usize>> {
    if x.order() != y.order() {
        return None;
    }
    let base = crate::group::find_isomorphism(x.circ(), y.circ())?;
    // every circ-isomorphism is base composed with a circ-automorphism of the
    // source; scan them for one that also respects dot
    for auto in automorphism_group(x.circ()) {
        let map: Vec<usize> = (0..x.order()).map(|a| base[auto.apply(a)]).collect();
        if is_dot_homomorphism(x, y, &map) {
            return Some(map);
        }
    }
    None
}

fn is_dot_homomorphism(x: &SkewBrace, y: &SkewBrace, map: &[usize]) -> bool {
    let n = x.order();
    for a in 0..n {
        for b in 0..n {
            if map[x.dot_mul(a, b)] != y.dot_mul(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}

pub fn braces_isomorphic(x: &SkewBrace, y: &SkewBrace) -> bool {
    find_brace_isomorphism(x, y).is_some()
}

/// Keeps one representative per isomorphism class, preserving first
/// occurrence order.
pub fn dedup_up_to_isomorphism(braces: &[SkewBrace]) -> Vec<SkewBrace> {
    let mut reps: Vec<SkewBrace> = Vec::new();
    for b in braces {
        if !reps.iter().any(|r| braces_isomorphic(r, b)) {
            reps.push(b.clone());
        }
    }
    reps
}
