//! Reflection maps and braided actions.
//!
//! Given a group with braiding operator r, a braided action on a set X is a
//! circ-action together with a map k: A x X -> A x X compatible with r in
//! four ways (listed at [`check_braided_action`]). Every braided action
//! solves the reflection equation
//!
//! ```text
//! (r x id)(id x k)(r x id)(id x k) = (id x k)(r x id)(id x k)(r x id)
//! ```
//!
//! and braided actions correspond exactly to skew brace actions through
//!
//! ```text
//! k(a, x) = (pi_{a o x}(a),  pi_{a o x}(a)-bar o a o x).
//! ```
//!
//! In the "generalized" variant the action-preservation axiom is replaced by
//! the reflection equation itself; the other three axioms are kept. The
//! checker verifies all five equations and classifies the result, making the
//! implication braided => generalized a continuously tested theorem.

use thiserror::Error;

use crate::action::{validate_brace_action, BraceAction, BraceActionError};
use crate::braiding::{braiding_from_brace, check_braid_relation, BraidingOperator, PairMap};
use crate::brace::SkewBrace;
use crate::group::{FiniteGroup, GroupAction};
use crate::report::{Check, CheckReport};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ReflectionError {
    #[error("underlying brace action is invalid: {0}")]
    InvalidAction(Box<BraceActionError>),
    #[error("the pair (action, k) is not a braided action:\n{0}")]
    NotBraided(CheckReport),
    #[error("derived reflection map violates a braided-action axiom ({0})")]
    InternalAxiomViolation(&'static str),
}

/// A candidate reflection map k: A x X -> A x X over a group and a set.
/// Whether it actually solves anything is established by the checkers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionMap {
    circ: FiniteGroup,
    set_size: usize,
    table: Vec<(usize, usize)>,
}

impl ReflectionMap {
    pub fn new(
        circ: FiniteGroup,
        set_size: usize,
        table: Vec<(usize, usize)>,
    ) -> Option<ReflectionMap> {
        let n = circ.order();
        if table.len() != n * set_size
            || table.iter().any(|&(a, x)| a >= n || x >= set_size)
        {
            return None;
        }
        Some(ReflectionMap { circ, set_size, table })
    }

    pub fn circ(&self) -> &FiniteGroup {
        &self.circ
    }

    pub fn group_order(&self) -> usize {
        self.circ.order()
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    #[inline]
    pub fn apply(&self, a: usize, x: usize) -> (usize, usize) {
        self.table[a * self.set_size + x]
    }

    pub fn as_pair_map(&self) -> PairMap {
        PairMap::new(self.circ.order(), self.set_size, self.table.clone())
            .expect("a reflection map is a valid pair map")
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.table
    }
}

/// How a candidate (action, k) pair relates to the braided-action axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// All four braided-action axioms hold (hence also the reflection
    /// equation).
    Braided,
    /// The three structural axioms hold and the reflection equation replaces
    /// action preservation.
    GeneralizedBraided,
    Neither,
}

/// Verdicts for the five equations of a braided action, plus the overall
/// classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedActionReport {
    /// k composed with multiplying A: `k(a o b, x)` factored through r and k.
    pub mul_compat: Check,
    /// k composed with the action on X: `k(a, b o x)` factored through r and k.
    pub act_compat: Check,
    /// k fixes (e, x).
    pub unit: Check,
    /// The action is preserved: first(k(a,x)) o second(k(a,x)) = a o x.
    pub action_preserved: Check,
    /// The reflection equation against r over all of A x A x X.
    pub reflection: Check,
    pub classification: Classification,
}

impl BraidedActionReport {
    pub fn to_report(&self) -> CheckReport {
        CheckReport::new(vec![
            self.mul_compat.clone(),
            self.act_compat.clone(),
            self.unit.clone(),
            self.action_preserved.clone(),
            self.reflection.clone(),
        ])
    }

    pub fn is_braided(&self) -> bool {
        self.classification == Classification::Braided
    }

    pub fn is_generalized(&self) -> bool {
        matches!(
            self.classification,
            Classification::Braided | Classification::GeneralizedBraided
        )
    }
}

/// Exhaustively checks the braided-action axioms of (act, k) against r and
/// classifies the result.
pub fn check_braided_action(
    r: &BraidingOperator,
    act: &GroupAction,
    k: &ReflectionMap,
) -> BraidedActionReport {
    let g = r.circ();
    let n = g.order();
    let m = act.set_size();
    assert_eq!(act.group_order(), n);
    assert_eq!(k.group_order(), n);
    assert_eq!(k.set_size(), m);

    // k(a o b, x) = (m x id)(id x k)(r x id)(id x k) applied to (a, b, x)
    let mut mul_compat = None;
    'mul: for a in 0..n {
        for b in 0..n {
            for x in 0..m {
                let (b1, x1) = k.apply(b, x);
                let (a2, b2) = r.apply(a, b1);
                let (b3, x3) = k.apply(b2, x1);
                let rhs = (g.mul(a2, b3), x3);
                if k.apply(g.mul(a, b), x) != rhs {
                    mul_compat = Some(vec![a, b, x]);
                    break 'mul;
                }
            }
        }
    }

    // k(a, b o x) = (id x act)(r x id)(id x k)(r x id) applied to (a, b, x)
    let mut act_compat = None;
    'act: for a in 0..n {
        for b in 0..n {
            for x in 0..m {
                let (b1, a1) = r.apply(a, b);
                let (c, y) = k.apply(a1, x);
                let (c2, d2) = r.apply(b1, c);
                let rhs = (c2, act.apply(d2, y));
                if k.apply(a, act.apply(b, x)) != rhs {
                    act_compat = Some(vec![a, b, x]);
                    break 'act;
                }
            }
        }
    }

    let unit = (0..m)
        .find(|&x| k.apply(g.unit(), x) != (g.unit(), x))
        .map(|x| vec![x]);

    let mut preserved = None;
    'pres: for a in 0..n {
        for x in 0..m {
            let (a1, x1) = k.apply(a, x);
            if act.apply(a1, x1) != act.apply(a, x) {
                preserved = Some(vec![a, x]);
                break 'pres;
            }
        }
    }

    let reflection = reflection_equation_witness(&r.as_pair_map(), &k.as_pair_map());

    let mul_compat = Check::from_witness("mul-compatibility", mul_compat);
    let act_compat = Check::from_witness("action-compatibility", act_compat);
    let unit = Check::from_witness("unit", unit);
    let action_preserved = Check::from_witness("action-preserved", preserved);
    let reflection = Check::from_witness("reflection-equation", reflection);

    let structural = mul_compat.pass && act_compat.pass && unit.pass;
    let classification = if structural && action_preserved.pass {
        // braided actions always solve the reflection equation
        assert!(reflection.pass, "a braided action failed the reflection equation");
        Classification::Braided
    } else if structural && reflection.pass {
        Classification::GeneralizedBraided
    } else {
        Classification::Neither
    };

    BraidedActionReport {
        mul_compat,
        act_compat,
        unit,
        action_preserved,
        reflection,
        classification,
    }
}

fn reflection_equation_witness(r: &PairMap, k: &PairMap) -> Option<Vec<usize>> {
    let z = r.left_size();
    assert_eq!(r.right_size(), z);
    assert_eq!(k.left_size(), z);
    let m = k.right_size();
    for a in 0..z {
        for b in 0..z {
            for x in 0..m {
                // left side: (r x id)(id x k)(r x id)(id x k), rightmost first
                let (b1, x1) = k.apply(b, x);
                let (a2, b2) = r.apply(a, b1);
                let (b3, x3) = k.apply(b2, x1);
                let (a4, b4) = r.apply(a2, b3);
                let lhs = (a4, b4, x3);
                // right side: (id x k)(r x id)(id x k)(r x id)
                let (a5, b5) = r.apply(a, b);
                let (b6, x6) = k.apply(b5, x);
                let (a7, b7) = r.apply(a5, b6);
                let (b8, x8) = k.apply(b7, x6);
                let rhs = (a7, b8, x8);
                if lhs != rhs {
                    return Some(vec![a, b, x]);
                }
            }
        }
    }
    None
}

/// Report of [`check_reflection_equation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionReport {
    /// The braid relation for r, a precondition of the reflection equation.
    pub braid_relation: Check,
    pub reflection: Check,
    /// Informational: solutions are not required to be invertible.
    pub k_bijective: bool,
}

impl ReflectionReport {
    pub fn all_pass(&self) -> bool {
        self.braid_relation.pass && self.reflection.pass
    }

    pub fn to_report(&self) -> CheckReport {
        CheckReport::new(vec![self.braid_relation.clone(), self.reflection.clone()])
    }
}

/// Checks the reflection equation of k with respect to r over the full
/// tuple space, after first checking that r satisfies the braid relation.
pub fn check_reflection_equation(r: &PairMap, k: &PairMap) -> ReflectionReport {
    let braid = check_braid_relation(r, false);
    ReflectionReport {
        braid_relation: braid.braid,
        reflection: Check::from_witness(
            "reflection-equation",
            reflection_equation_witness(r, k),
        ),
        k_bijective: k.is_bijective(),
    }
}

/// The reflection map of a skew brace action:
/// `k(a, x) = (pi_{a o x}(a), pi_{a o x}(a)-bar o a o x)`.
///
/// The result is always a braided action for the braiding of the brace; this
/// is re-verified, and a failure indicates a bug rather than bad input.
pub fn k_from_action(action: &BraceAction) -> Result<ReflectionMap, ReflectionError> {
    let brace = action.brace();
    let report = validate_brace_action(brace, action.action(), action.pi_family());
    if !report.all_pass() {
        return Err(ReflectionError::InvalidAction(Box::new(
            BraceActionError::InvalidAction(report),
        )));
    }
    let n = brace.order();
    let m = action.set_size();
    let mut table = Vec::with_capacity(n * m);
    for a in 0..n {
        for x in 0..m {
            let ax = action.apply(a, x);
            let p = action.pi(ax).apply(a);
            table.push((p, action.apply(brace.bar(p), ax)));
        }
    }
    let k = ReflectionMap { circ: brace.circ().clone(), set_size: m, table };
    let r = braiding_from_brace(brace)
        .map_err(|_| ReflectionError::InternalAxiomViolation("braiding"))?;
    let verdict = check_braided_action(&r, action.action(), &k);
    if !verdict.is_braided() {
        return Err(ReflectionError::InternalAxiomViolation("braided-classification"));
    }
    Ok(k)
}

/// Recovers the endomorphism family of a braided action:
/// `pi_x(a) = first(k(a, a-bar o x))`. Inverse to [`k_from_action`].
pub fn action_from_k(
    brace: &SkewBrace,
    act: &GroupAction,
    k: &ReflectionMap,
) -> Result<BraceAction, ReflectionError> {
    let r = braiding_from_brace(brace)
        .map_err(|_| ReflectionError::InternalAxiomViolation("braiding"))?;
    let verdict = check_braided_action(&r, act, k);
    if !verdict.is_braided() {
        return Err(ReflectionError::NotBraided(verdict.to_report()));
    }
    let n = brace.order();
    let m = act.set_size();
    let pi = (0..m)
        .map(|x| {
            let table =
                (0..n).map(|a| k.apply(a, act.apply(brace.bar(a), x)).0).collect();
            crate::group::Endomorphism::from_table_unchecked(table)
        })
        .collect();
    BraceAction::new(brace, act.clone(), pi)
        .map_err(|e| ReflectionError::InvalidAction(Box::new(e)))
}

/// The square of a braiding operator as a reflection map over X = A with the
/// left translation action.
pub fn k_squared(r: &BraidingOperator) -> ReflectionMap {
    let square = r.as_pair_map();
    let square = square.compose(&square);
    ReflectionMap {
        circ: r.circ().clone(),
        set_size: r.order(),
        table: square.entries().to_vec(),
    }
}

/// The divided-difference family of a brace action:
/// `beta_x(a) = a . pi_x(a)^{-1}` together with the twisted products
/// `a ._x b = a . b . a^{-1} . beta_x(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaFamily {
    order: usize,
    set_size: usize,
    /// beta[x][a]
    beta: Vec<usize>,
    /// dotx[x][a][b]
    dotx: Vec<usize>,
}

impl BetaFamily {
    #[inline]
    pub fn beta(&self, x: usize, a: usize) -> usize {
        self.beta[x * self.order + a]
    }

    #[inline]
    pub fn dotx(&self, x: usize, a: usize, b: usize) -> usize {
        self.dotx[(x * self.order + a) * self.order + b]
    }
}

/// Builds the beta family of a valid brace action and exhaustively verifies
/// the identities it must satisfy:
///
/// * the twisted product computed from beta agrees with its coupled form
///   `a ._x b = b o beta_{b-bar o x}(rho_{b-bar}(a))`;
/// * each `._x` is a unital action of the dot group on A;
/// * circ moves twisted products by `b o (a ._x c) = rho_b(a) ._{b o x} (b o c)`;
/// * beta is a twisted homomorphism: `beta_x(a.b) = a . beta_x(b) . a^{-1} . beta_x(a)`;
/// * dot products distribute as `a ._x (b.c) = a . b . a^{-1} . (a ._x c)`.
///
/// Any failure on a validated action is an internal bug.
pub fn beta_machinery(action: &BraceAction) -> Result<BetaFamily, ReflectionError> {
    let brace = action.brace();
    let report = validate_brace_action(brace, action.action(), action.pi_family());
    if !report.all_pass() {
        return Err(ReflectionError::InvalidAction(Box::new(
            BraceActionError::InvalidAction(report),
        )));
    }
    let n = brace.order();
    let m = action.set_size();
    let dot = brace.dot();
    let maps = brace.maps();

    let mut beta = vec![0usize; m * n];
    for x in 0..m {
        for a in 0..n {
            beta[x * n + a] = dot.mul(a, dot.inv(action.pi(x).apply(a)));
        }
    }
    let mut dotx = vec![0usize; m * n * n];
    for x in 0..m {
        for a in 0..n {
            for b in 0..n {
                let v = dot.mul(dot.mul(dot.mul(a, b), dot.inv(a)), beta[x * n + a]);
                dotx[(x * n + a) * n + b] = v;
            }
        }
    }
    let fam = BetaFamily { order: n, set_size: m, beta, dotx };

    let fail = |name: &'static str| Err(ReflectionError::InternalAxiomViolation(name));

    // coupled form of the twisted product
    for x in 0..m {
        for a in 0..n {
            for b in 0..n {
                let bb = brace.bar(b);
                let via_beta = brace
                    .circ_mul(b, fam.beta(action.apply(bb, x), maps.rho(bb, a)));
                if fam.dotx(x, a, b) != via_beta {
                    return fail("twisted-product-coupling");
                }
            }
        }
    }
    // unital action law for every ._x
    for x in 0..m {
        for a in 0..n {
            if fam.dotx(x, dot.unit(), a) != a {
                return fail("twisted-product-unit");
            }
            for b in 0..n {
                for c in 0..n {
                    if fam.dotx(x, dot.mul(a, b), c) != fam.dotx(x, a, fam.dotx(x, b, c)) {
                        return fail("twisted-product-action");
                    }
                }
            }
        }
    }
    // compatibility with circ
    for x in 0..m {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = brace.circ_mul(b, fam.dotx(x, a, c));
                    let rhs = fam.dotx(
                        action.apply(b, x),
                        maps.rho(b, a),
                        brace.circ_mul(b, c),
                    );
                    if lhs != rhs {
                        return fail("circ-compatibility");
                    }
                }
            }
        }
    }
    // beta is a twisted homomorphism
    for x in 0..m {
        for a in 0..n {
            for b in 0..n {
                let lhs = fam.beta(x, dot.mul(a, b));
                let rhs = dot.mul(
                    dot.mul(dot.mul(a, fam.beta(x, b)), dot.inv(a)),
                    fam.beta(x, a),
                );
                if lhs != rhs {
                    return fail("beta-product");
                }
            }
        }
    }
    // twisted products absorb dot products on the right
    for x in 0..m {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = fam.dotx(x, a, dot.mul(b, c));
                    let rhs = dot.mul(
                        dot.mul(dot.mul(a, b), dot.inv(a)),
                        fam.dotx(x, a, c),
                    );
                    if lhs != rhs {
                        return fail("dot-absorption");
                    }
                }
            }
        }
    }
    Ok(fam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{standard_action, trivial_extension, universal_action};
    use crate::brace::{enumerate_skew_braces, s3_brace};
    use crate::catalog;
    use crate::group::Endomorphism;

    fn small_braces(max_order: usize) -> Vec<SkewBrace> {
        (1..=max_order)
            .flat_map(catalog::groups_of_order)
            .flat_map(|(_, g)| enumerate_skew_braces(&g).unwrap())
            .collect()
    }

    /// Independent route for the reflection equation: build both sides as
    /// whole composite tables on Z x Z x X and compare them.
    fn reflection_equation_by_table_composition(r: &PairMap, k: &PairMap) -> bool {
        let z = r.left_size();
        let m = k.right_size();
        type Triple = (usize, usize, usize);
        let apply_r12 = |t: Triple| {
            let (a, b) = r.apply(t.0, t.1);
            (a, b, t.2)
        };
        let apply_k23 = |t: Triple| {
            let (b, x) = k.apply(t.1, t.2);
            (t.0, b, x)
        };
        let all: Vec<Triple> = (0..z)
            .flat_map(|a| (0..z).flat_map(move |b| (0..m).map(move |x| (a, b, x))))
            .collect();
        let lhs: Vec<Triple> =
            all.iter().map(|&t| apply_r12(apply_k23(apply_r12(apply_k23(t))))).collect();
        let rhs: Vec<Triple> =
            all.iter().map(|&t| apply_k23(apply_r12(apply_k23(apply_r12(t))))).collect();
        lhs == rhs
    }

    #[test]
    fn trivial_extension_gives_the_absorbing_reflection_map() {
        let b = s3_brace();
        let act = trivial_extension(&b, GroupAction::translation(b.circ()));
        let k = k_from_action(&act).unwrap();
        for a in 0..6 {
            for x in 0..6 {
                assert_eq!(k.apply(a, x), (b.unit(), b.circ_mul(a, x)));
            }
        }
    }

    #[test]
    fn standard_action_reflection_map_is_the_braiding_squared() {
        for brace in small_braces(6) {
            let r = braiding_from_brace(&brace).unwrap();
            let k = k_from_action(&standard_action(&brace)).unwrap();
            assert_eq!(k, k_squared(&r));
        }
    }

    #[test]
    fn k_squared_of_the_flip_is_the_identity() {
        let r = BraidingOperator::flip(catalog::cyclic(4));
        let k = k_squared(&r);
        assert_eq!(k.as_pair_map(), PairMap::identity(4, 4));
    }

    #[test]
    fn s3_universal_action_is_braided_on_ten_points() {
        let b = s3_brace();
        let u = universal_action(&b);
        let k = k_from_action(&u).unwrap();
        let r = braiding_from_brace(&b).unwrap();
        let verdict = check_braided_action(&r, u.action(), &k);
        assert_eq!(verdict.classification, Classification::Braided);
        assert_eq!(k.set_size(), 10);
    }

    #[test]
    fn action_and_k_are_inverse_constructions() {
        for brace in small_braces(6) {
            for action in [
                trivial_extension(&brace, GroupAction::translation(brace.circ())),
                standard_action(&brace),
                universal_action(&brace),
            ] {
                let k = k_from_action(&action).unwrap();
                let back = action_from_k(&brace, action.action(), &k).unwrap();
                assert_eq!(back, action);
                assert_eq!(k_from_action(&back).unwrap(), k);
            }
        }
    }

    #[test]
    fn absorbing_k_recovers_the_trivial_extension() {
        let b = s3_brace();
        let n = b.order();
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |x| (a, x)))
            .map(|(a, x)| (b.unit(), b.circ_mul(a, x)))
            .collect();
        let k = ReflectionMap::new(b.circ().clone(), n, table).unwrap();
        let act = GroupAction::translation(b.circ());
        let recovered = action_from_k(&b, &act, &k).unwrap();
        assert_eq!(recovered, trivial_extension(&b, act));
    }

    #[test]
    fn k_squared_recovers_conjugation() {
        for brace in small_braces(6) {
            let r = braiding_from_brace(&brace).unwrap();
            let k = k_squared(&r);
            let act = GroupAction::translation(brace.circ());
            let verdict = check_braided_action(&r, &act, &k);
            assert_eq!(verdict.classification, Classification::Braided);
            let recovered = action_from_k(&brace, &act, &k).unwrap();
            for b in 0..brace.order() {
                assert_eq!(
                    *recovered.pi(b),
                    crate::group::conjugation_by_inverse(brace.dot(), b)
                );
            }
        }
    }

    #[test]
    fn pi_extraction_agrees_with_the_direct_read() {
        // first(k(a, x)) = pi_{a o x}(a): reading k at a free x gives the
        // family at the moved point; the second leg is then forced by
        // action preservation
        let b = s3_brace();
        let u = universal_action(&b);
        let k = k_from_action(&u).unwrap();
        for a in 0..6 {
            for x in 0..u.set_size() {
                let (p, y) = k.apply(a, x);
                assert_eq!(p, u.pi(u.apply(a, x)).apply(a));
                assert_eq!(y, u.apply(b.bar(p), u.apply(a, x)));
            }
        }
    }

    #[test]
    fn reflection_checker_agrees_with_table_composition_oracle() {
        // braiding square: passes
        let b = s3_brace();
        let r = braiding_from_brace(&b).unwrap().as_pair_map();
        let k = k_squared(&braiding_from_brace(&b).unwrap()).as_pair_map();
        let rep = check_reflection_equation(&r, &k);
        assert!(rep.all_pass());
        assert!(reflection_equation_by_table_composition(&r, &k));

        // flip with identity k: passes
        let flip = BraidingOperator::flip(catalog::cyclic(2)).as_pair_map();
        let id = PairMap::identity(2, 3);
        let rep = check_reflection_equation(&flip, &id);
        assert!(rep.all_pass());
        assert!(reflection_equation_by_table_composition(&flip, &id));

        // flip with the swap of (0, x0) and (1, x0) on a two-point X
        let mut table = vec![(0, 0); 4];
        // k(a, x) indexed a * 2 + x
        table[0] = (1, 0); // k(0, x0) = (1, x0)
        table[1] = (0, 1);
        table[2] = (0, 0); // k(1, x0) = (0, x0)
        table[3] = (1, 1);
        let k = PairMap::new(2, 2, table).unwrap();
        let verdict = check_reflection_equation(&flip, &k);
        assert_eq!(
            verdict.reflection.pass,
            reflection_equation_by_table_composition(&flip, &k)
        );
        assert!(verdict.reflection.pass);
        assert!(verdict.k_bijective);
    }

    #[test]
    fn identity_k_over_a_noncommutative_brace_is_not_braided() {
        // the unit and mul-compatibility axioms hold for the identity map,
        // but compatibility with the action fails
        let b = SkewBrace::trivial(&catalog::symmetric_3());
        let r = braiding_from_brace(&b).unwrap();
        let act = GroupAction::translation(b.circ());
        let k = ReflectionMap::new(
            b.circ().clone(),
            6,
            PairMap::identity(6, 6).entries().to_vec(),
        )
        .unwrap();
        let verdict = check_braided_action(&r, &act, &k);
        assert!(verdict.unit.pass);
        assert!(verdict.mul_compat.pass);
        assert!(verdict.action_preserved.pass);
        assert!(verdict.reflection.pass);
        assert!(!verdict.act_compat.pass);
        assert_eq!(verdict.classification, Classification::Neither);
    }

    #[test]
    fn trivial_extension_beta_is_the_identity_family() {
        let b = s3_brace();
        let act = trivial_extension(&b, GroupAction::translation(b.circ()));
        let fam = beta_machinery(&act).unwrap();
        for x in 0..6 {
            for a in 0..6 {
                assert_eq!(fam.beta(x, a), a);
                for c in 0..6 {
                    assert_eq!(fam.dotx(x, a, c), b.dot_mul(a, c));
                }
            }
        }
    }

    #[test]
    fn identity_pi_over_an_abelian_brace_gives_the_projection_products() {
        // with pi = id over a commutative dot, beta is constant-unit and
        // a ._x b collapses to b
        let g = catalog::cyclic(4);
        let b = SkewBrace::trivial(&g);
        let pi = vec![Endomorphism::identity(&g); 4];
        let act =
            BraceAction::new(&b, GroupAction::translation(b.circ()), pi).unwrap();
        let fam = beta_machinery(&act).unwrap();
        for x in 0..4 {
            for a in 0..4 {
                assert_eq!(fam.beta(x, a), b.unit());
                for c in 0..4 {
                    assert_eq!(fam.dotx(x, a, c), c);
                }
            }
        }
    }

    #[test]
    fn standard_action_beta_passes_all_identities() {
        for brace in small_braces(6) {
            let st = standard_action(&brace);
            let fam = beta_machinery(&st).unwrap();
            let dot = brace.dot();
            for a in 0..brace.order() {
                for x in 0..brace.order() {
                    let alpha = st.pi(x).apply(a);
                    assert_eq!(fam.beta(x, a), dot.mul(a, dot.inv(alpha)));
                }
            }
        }
    }
}
