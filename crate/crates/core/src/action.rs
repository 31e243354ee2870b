//! Actions of skew braces.
//!
//! An action of a skew brace (A, o, .) is a left (A, o)-set X together with a
//! family of dot-endomorphisms pi_x that is equivariant for the diamond
//! action `a <> chi = lambda_a . chi . rho_a^{-1}` on End(A, .):
//! `pi_{a o x} = a <> pi_x`. Equivalently, the pi_x form a twisted cocycle
//! family: `pi_x(a o b) = lambda_a(pi_{a-bar o x}(b)) . pi_x(a)`. The
//! validator checks both characterizations independently and asserts that
//! they agree.

use thiserror::Error;

use crate::brace::SkewBrace;
use crate::group::{
    endo_index, endomorphism_monoid, endomorphism_witness, Endomorphism, GroupAction,
};
use crate::report::{Check, CheckReport};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BraceActionError {
    #[error("the map is not an endomorphism of the dot group")]
    NotEndomorphism,
    #[error("the given elements do not form a circ-subgroup")]
    NotSubgroup,
    #[error("the cocycle condition fails at subgroup element {0}, group element {1}")]
    CocycleFailed(usize, usize),
    #[error("the point map is not circ-equivariant at ({0}, {1})")]
    NotEquivariant(usize, usize),
    #[error("brace action validation failed:\n{0}")]
    InvalidAction(CheckReport),
    #[error("group action invalid: {0}")]
    GroupAction(#[from] crate::group::ActionError),
}

/// A validated skew brace action: the circ action together with the
/// endomorphism family, and the brace they live over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraceAction {
    brace: SkewBrace,
    act: GroupAction,
    pi: Vec<Endomorphism>,
}

impl BraceAction {
    /// Validates the triple and wraps it; see [`validate_brace_action`].
    pub fn new(
        brace: &SkewBrace,
        act: GroupAction,
        pi: Vec<Endomorphism>,
    ) -> Result<BraceAction, BraceActionError> {
        let report = validate_brace_action(brace, &act, &pi);
        if !report.all_pass() {
            return Err(BraceActionError::InvalidAction(report));
        }
        Ok(BraceAction { brace: brace.clone(), act, pi })
    }

    pub fn brace(&self) -> &SkewBrace {
        &self.brace
    }

    pub fn action(&self) -> &GroupAction {
        &self.act
    }

    pub fn set_size(&self) -> usize {
        self.act.set_size()
    }

    #[inline]
    pub fn apply(&self, a: usize, x: usize) -> usize {
        self.act.apply(a, x)
    }

    pub fn pi(&self, x: usize) -> &Endomorphism {
        &self.pi[x]
    }

    pub fn pi_family(&self) -> &[Endomorphism] {
        &self.pi
    }
}

/// The diamond action of a brace element on a dot-endomorphism:
/// `(a <> chi)(t) = lambda_a(chi(rho_a^{-1}(t)))`.
pub fn diamond(
    brace: &SkewBrace,
    a: usize,
    chi: &Endomorphism,
) -> Result<Endomorphism, BraceActionError> {
    if Endomorphism::new(brace.dot(), chi.table().to_vec()).is_none() {
        return Err(BraceActionError::NotEndomorphism);
    }
    Ok(diamond_unchecked(brace, a, chi))
}

fn diamond_unchecked(brace: &SkewBrace, a: usize, chi: &Endomorphism) -> Endomorphism {
    let maps = brace.maps();
    let table = (0..brace.order())
        .map(|t| maps.lambda(a, chi.apply(maps.rho_inv(a, t))))
        .collect();
    let endo = Endomorphism::from_table_unchecked(table);
    debug_assert!(Endomorphism::new(brace.dot(), endo.table().to_vec()).is_some());
    endo
}

/// The universal action: X is the full endomorphism monoid of the dot group
/// in lexicographic order, circ acts by diamond, and pi is the identity
/// inclusion.
pub fn universal_action(brace: &SkewBrace) -> BraceAction {
    let endos = endomorphism_monoid(brace.dot());
    let index = endo_index(&endos);
    let n = brace.order();
    let m = endos.len();
    let mut act = vec![0usize; n * m];
    for a in 0..n {
        for (i, chi) in endos.iter().enumerate() {
            act[a * m + i] = index[diamond_unchecked(brace, a, chi).table()];
        }
    }
    let act = GroupAction::from_flat(brace.circ(), m, act)
        .expect("diamond is a group action on the endomorphism monoid");
    BraceAction::new(brace, act, endos).expect("the universal action validates")
}

/// The standard action: X = A with circ acting by left translation and
/// `pi_a(b) = a^{-1} . b . a`.
pub fn standard_action(brace: &SkewBrace) -> BraceAction {
    let act = GroupAction::translation(brace.circ());
    let pi = (0..brace.order())
        .map(|a| crate::group::conjugation_by_inverse(brace.dot(), a))
        .collect();
    BraceAction::new(brace, act, pi).expect("the standard action validates")
}

/// Extends an arbitrary circ-action trivially, with every pi_x the
/// constant-unit endomorphism.
pub fn trivial_extension(brace: &SkewBrace, act: GroupAction) -> BraceAction {
    assert_eq!(act.group_order(), brace.order());
    let pi = vec![Endomorphism::constant_unit(brace.dot()); act.set_size()];
    BraceAction::new(brace, act, pi).expect("the trivial extension validates")
}

/// The action on the left coset space of a circ-subgroup induced by a
/// cocycle endomorphism: `pi(a o B) = a <> chi`.
///
/// `chi` must satisfy `chi(b o a) = lambda_b(chi(a)) . chi(b)` for b in the
/// subgroup and a arbitrary; that makes `B <> chi = chi`, so the family is
/// well defined on cosets. Coset points are canonical least representatives
/// in increasing order.
pub fn irreducible_action(
    brace: &SkewBrace,
    subgroup: &[usize],
    chi: &Endomorphism,
) -> Result<BraceAction, BraceActionError> {
    if !brace.circ().is_subgroup(subgroup) {
        return Err(BraceActionError::NotSubgroup);
    }
    if Endomorphism::new(brace.dot(), chi.table().to_vec()).is_none() {
        return Err(BraceActionError::NotEndomorphism);
    }
    let n = brace.order();
    let maps = brace.maps();
    for &b in subgroup {
        for a in 0..n {
            let lhs = chi.apply(brace.circ_mul(b, a));
            let rhs = brace.dot_mul(maps.lambda(b, chi.apply(a)), chi.apply(b));
            if lhs != rhs {
                return Err(BraceActionError::CocycleFailed(b, a));
            }
        }
    }
    for &b in subgroup {
        assert_eq!(
            diamond_unchecked(brace, b, chi),
            *chi,
            "a cocycle is fixed by its subgroup"
        );
    }

    // left cosets a o B, keyed by least representative
    let mut rep_of = vec![usize::MAX; n];
    for a in 0..n {
        let rep = subgroup
            .iter()
            .map(|&b| brace.circ_mul(a, b))
            .min()
            .expect("subgroup is nonempty");
        rep_of[a] = rep;
    }
    let mut reps: Vec<usize> = rep_of.clone();
    reps.sort_unstable();
    reps.dedup();
    let coset_index =
        |a: usize| reps.binary_search(&rep_of[a]).expect("every element lies in a coset");

    let m = reps.len();
    let mut act = vec![0usize; n * m];
    for a in 0..n {
        for (i, &rep) in reps.iter().enumerate() {
            act[a * m + i] = coset_index(brace.circ_mul(a, rep));
        }
    }
    let act = GroupAction::from_flat(brace.circ(), m, act)?;
    let pi = reps.iter().map(|&rep| diamond_unchecked(brace, rep, chi)).collect();
    BraceAction::new(brace, act, pi)
}

/// The inner action attached to a circ-equivariant map c: X -> A:
/// `pi_x(t) = c_x^{-1} . t . c_x`.
pub fn inner_action(
    brace: &SkewBrace,
    act: GroupAction,
    c: &[usize],
) -> Result<BraceAction, BraceActionError> {
    assert_eq!(act.group_order(), brace.order());
    assert_eq!(c.len(), act.set_size());
    for a in 0..brace.order() {
        for x in 0..act.set_size() {
            if c[act.apply(a, x)] != brace.circ_mul(a, c[x]) {
                return Err(BraceActionError::NotEquivariant(a, x));
            }
        }
    }
    let pi = c
        .iter()
        .map(|&cx| crate::group::conjugation_by_inverse(brace.dot(), cx))
        .collect();
    BraceAction::new(brace, act, pi)
}

/// Exhaustive report on a candidate brace action:
///
/// * `pi-endomorphism`: every pi_x is multiplicative on the dot group;
/// * `pi-equivariance`: pi_{a o x} = a <> pi_x as tables;
/// * `pi-cocycle`: pi_x(a o b) = lambda_a(pi_{a-bar o x}(b)) . pi_x(a);
/// * `criteria-equivalence`: given the endomorphism check, equivariance and
///   the cocycle identity must hold or fail together. This is a theorem, so
///   the entry failing means an implementation bug rather than bad input.
pub fn validate_brace_action(
    brace: &SkewBrace,
    act: &GroupAction,
    pi: &[Endomorphism],
) -> CheckReport {
    let n = brace.order();
    let m = act.set_size();
    assert_eq!(act.group_order(), n);
    assert_eq!(pi.len(), m);

    let mut endo = None;
    'endo: for (x, chi) in pi.iter().enumerate() {
        if let Some((a, b)) = endomorphism_witness(brace.dot(), chi.table()) {
            endo = Some(vec![x, a, b]);
            break 'endo;
        }
    }

    let mut equivariance = None;
    'equiv: for a in 0..n {
        for x in 0..m {
            let moved = diamond_unchecked(brace, a, &pi[x]);
            if pi[act.apply(a, x)] != moved {
                let t = (0..n)
                    .find(|&t| pi[act.apply(a, x)].apply(t) != moved.apply(t))
                    .unwrap();
                equivariance = Some(vec![a, x, t]);
                break 'equiv;
            }
        }
    }

    let maps = brace.maps();
    let mut cocycle = None;
    'cocycle: for x in 0..m {
        for a in 0..n {
            let abar_x = act.apply(brace.bar(a), x);
            for b in 0..n {
                let lhs = pi[x].apply(brace.circ_mul(a, b));
                let rhs =
                    brace.dot_mul(maps.lambda(a, pi[abar_x].apply(b)), pi[x].apply(a));
                if lhs != rhs {
                    cocycle = Some(vec![x, a, b]);
                    break 'cocycle;
                }
            }
        }
    }

    let equivalence_holds = endo.is_some() || (equivariance.is_none() == cocycle.is_none());

    CheckReport::new(vec![
        Check::from_witness("pi-endomorphism", endo),
        Check::from_witness("pi-equivariance", equivariance),
        Check::from_witness("pi-cocycle", cocycle),
        Check::from_witness(
            "criteria-equivalence",
            if equivalence_holds { None } else { Some(vec![]) },
        ),
    ])
}

/// All diamond-fixed points in the endomorphism monoid of the dot group.
/// Computed both as fixed points of the diamond action and as the maps
/// intertwining rho with lambda; the two characterizations are asserted to
/// agree.
pub fn fixed_endomorphisms(brace: &SkewBrace) -> Vec<Endomorphism> {
    let n = brace.order();
    let endos = endomorphism_monoid(brace.dot());
    let by_diamond: Vec<Endomorphism> = endos
        .iter()
        .filter(|chi| (0..n).all(|a| diamond_unchecked(brace, a, chi) == **chi))
        .cloned()
        .collect();
    let maps = brace.maps();
    let by_intertwining: Vec<Endomorphism> = endos
        .iter()
        .filter(|chi| {
            (0..n).all(|a| {
                (0..n).all(|t| chi.apply(maps.rho(a, t)) == maps.lambda(a, chi.apply(t)))
            })
        })
        .cloned()
        .collect();
    assert_eq!(by_diamond, by_intertwining);
    by_diamond
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{enumerate_skew_braces, s3_brace};
    use crate::catalog;
    use crate::group::{conjugation_endo, orbits, transitive_action_isomorphism};

    fn small_braces(max_order: usize) -> Vec<SkewBrace> {
        (1..=max_order)
            .flat_map(catalog::groups_of_order)
            .flat_map(|(_, g)| enumerate_skew_braces(&g).unwrap())
            .collect()
    }

    #[test]
    fn diamond_fixes_everything_at_the_unit_and_over_trivial_abelian_braces() {
        let b = SkewBrace::trivial(&catalog::cyclic(4));
        for chi in endomorphism_monoid(b.dot()) {
            for a in 0..4 {
                assert_eq!(diamond(&b, a, &chi).unwrap(), chi);
            }
        }
        let s3 = s3_brace();
        for chi in endomorphism_monoid(s3.dot()) {
            assert_eq!(diamond(&s3, s3.unit(), &chi).unwrap(), chi);
        }
    }

    #[test]
    fn diamond_rejects_non_endomorphisms() {
        let b = s3_brace();
        let bogus = Endomorphism::from_table_unchecked(vec![1, 0, 2, 3, 4, 5]);
        assert_eq!(
            diamond(&b, 1, &bogus).unwrap_err(),
            BraceActionError::NotEndomorphism
        );
    }

    #[test]
    fn diamond_permutes_the_inner_endomorphisms_of_the_s3_brace() {
        // over the S3 brace, (12) <> mu_s = mu_{(23) s (321)}
        let b = s3_brace();
        let dot = b.dot();
        for s in 0..6 {
            let moved = diamond(&b, 1, &conjugation_endo(dot, s)).unwrap();
            let expected = conjugation_endo(dot, dot.mul(dot.mul(2, s), 5));
            assert_eq!(moved, expected);
        }
    }

    #[test]
    fn universal_action_of_the_trivial_z2_brace_is_two_fixed_points() {
        let b = SkewBrace::trivial(&catalog::cyclic(2));
        let u = universal_action(&b);
        assert_eq!(u.set_size(), 2);
        assert_eq!(orbits(u.action()).len(), 2);
    }

    #[test]
    fn universal_action_of_the_s3_brace_has_the_published_orbit_profile() {
        let u = universal_action(&s3_brace());
        assert_eq!(u.set_size(), 10);
        let sizes: Vec<usize> = orbits(u.action()).iter().map(|o| o.len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 6]);
    }

    #[test]
    fn the_six_orbit_of_the_s3_universal_action_is_the_translation_action() {
        let b = s3_brace();
        let u = universal_action(&b);
        let orbit = orbits(u.action()).into_iter().find(|o| o.len() == 6).unwrap();
        let restricted = restrict_to_orbit(&u, &orbit);
        let translation = GroupAction::translation(b.circ());
        assert!(transitive_action_isomorphism(b.circ(), &restricted, &translation).is_some());
    }

    #[test]
    fn s3_brace_has_exactly_two_fixed_endomorphisms() {
        // the constant-unit map is always fixed; the derived computation
        // pins the second fixed point to the parity map sending odd
        // permutations to (23)
        let b = s3_brace();
        let fixed = fixed_endomorphisms(&b);
        let tables: Vec<&[usize]> = fixed.iter().map(|e| e.table()).collect();
        assert_eq!(tables, vec![&[0, 0, 0, 0, 0, 0][..], &[0, 2, 2, 2, 0, 0][..]]);
    }

    #[test]
    fn identity_is_fixed_exactly_over_braces_with_commutative_dot() {
        for brace in small_braces(6) {
            let id = Endomorphism::identity(brace.dot());
            let fixed = fixed_endomorphisms(&brace);
            assert_eq!(fixed.contains(&id), brace.dot().is_abelian());
            assert!(fixed.contains(&Endomorphism::constant_unit(brace.dot())));
        }
    }

    #[test]
    fn standard_action_facts() {
        // abelian dot: conjugation is trivial
        let b = SkewBrace::trivial(&catalog::cyclic(6));
        let s = standard_action(&b);
        for x in 0..6 {
            assert_eq!(*s.pi(x), Endomorphism::identity(b.dot()));
        }
        // the composition antihomomorphism pi_{a.b} = pi_b . pi_a
        let s3 = s3_brace();
        let st = standard_action(&s3);
        for a in 0..6 {
            for b in 0..6 {
                let ab = s3.dot_mul(a, b);
                assert_eq!(*st.pi(ab), st.pi(b).compose(st.pi(a)));
            }
        }
    }

    #[test]
    fn diamond_intertwines_the_standard_family_with_circ() {
        // a <> pi_b = pi_{a o b} over every small brace
        for brace in small_braces(6) {
            let st = standard_action(&brace);
            for a in 0..brace.order() {
                for b in 0..brace.order() {
                    assert_eq!(
                        diamond_unchecked(&brace, a, st.pi(b)),
                        *st.pi(brace.circ_mul(a, b))
                    );
                }
            }
        }
    }

    #[test]
    fn trivial_extensions_validate_on_any_action() {
        let b = s3_brace();
        trivial_extension(&b, GroupAction::trivial(b.circ(), 1));
        trivial_extension(&b, GroupAction::translation(b.circ()));
        let z2 = SkewBrace::trivial(&catalog::cyclic(2));
        trivial_extension(&z2, GroupAction::trivial(z2.circ(), 5));
    }

    #[test]
    fn irreducible_action_on_the_full_group_is_a_fixed_point() {
        let b = s3_brace();
        let all: Vec<usize> = (0..6).collect();
        for chi in fixed_endomorphisms(&b) {
            let act = irreducible_action(&b, &all, &chi).unwrap();
            assert_eq!(act.set_size(), 1);
            assert_eq!(*act.pi(0), chi);
        }
    }

    #[test]
    fn irreducible_action_on_the_unit_subgroup_is_free() {
        let b = s3_brace();
        let chi = Endomorphism::constant_unit(b.dot());
        let act = irreducible_action(&b, &[b.unit()], &chi).unwrap();
        assert_eq!(act.set_size(), 6);
        assert_eq!(orbits(act.action()).len(), 1);
    }

    #[test]
    fn irreducible_action_rejects_non_subgroups_and_non_cocycles() {
        let b = s3_brace();
        let chi = Endomorphism::constant_unit(b.dot());
        assert_eq!(
            irreducible_action(&b, &[0, 1, 2], &chi).unwrap_err(),
            BraceActionError::NotSubgroup
        );
        // the identity is an endomorphism but not a cocycle over this brace
        let id = Endomorphism::identity(b.dot());
        let all: Vec<usize> = (0..6).collect();
        assert!(matches!(
            irreducible_action(&b, &all, &id).unwrap_err(),
            BraceActionError::CocycleFailed(..)
        ));
    }

    #[test]
    fn trivial_brace_cocycles_are_the_commutator_killers() {
        // over the trivial brace on S3, chi is a valid cocycle for subgroup B
        // exactly when chi kills every commutator [a, b] with b in B
        let s3 = catalog::symmetric_3();
        let b = SkewBrace::trivial(&s3);
        let subgroup = [0usize, 1];
        for chi in endomorphism_monoid(&s3) {
            let by_construction = irreducible_action(&b, &subgroup, &chi).is_ok();
            let kills_commutators = subgroup.iter().all(|&bb| {
                (0..6).all(|a| {
                    let comm =
                        s3.mul(s3.mul(s3.mul(a, bb), s3.inv(a)), s3.inv(bb));
                    chi.apply(comm) == s3.unit()
                })
            });
            assert_eq!(by_construction, kills_commutators);
        }
    }

    #[test]
    fn inner_action_with_identity_map_is_the_standard_action() {
        let b = s3_brace();
        let c: Vec<usize> = (0..6).collect();
        let inner = inner_action(&b, GroupAction::translation(b.circ()), &c).unwrap();
        let standard = standard_action(&b);
        assert_eq!(inner, standard);
    }

    #[test]
    fn constant_unit_point_maps_are_only_equivariant_over_the_trivial_group() {
        // c(a o x) = a o c(x) forces a o e = e, so a constant-unit c over a
        // trivial circ-action exists only for the one-element brace, where
        // the resulting inner action is the trivial extension
        let one = SkewBrace::trivial(&catalog::trivial());
        let act = GroupAction::trivial(one.circ(), 3);
        let inner = inner_action(&one, act.clone(), &[one.unit(); 3]).unwrap();
        assert_eq!(inner, trivial_extension(&one, act));

        let b = s3_brace();
        let act = GroupAction::trivial(b.circ(), 3);
        assert!(matches!(
            inner_action(&b, act, &[b.unit(); 3]).unwrap_err(),
            BraceActionError::NotEquivariant(..)
        ));
    }

    #[test]
    fn inner_action_rejects_non_equivariant_maps() {
        let b = s3_brace();
        let act = GroupAction::trivial(b.circ(), 2);
        assert!(matches!(
            inner_action(&b, act, &[1, 2]).unwrap_err(),
            BraceActionError::NotEquivariant(..)
        ));
    }

    #[test]
    fn identity_family_fails_equivariance_over_a_noncommutative_dot() {
        let b = SkewBrace::trivial(&catalog::symmetric_3());
        let act = GroupAction::trivial(b.circ(), 1);
        let pi = vec![Endomorphism::identity(b.dot())];
        let report = validate_brace_action(&b, &act, &pi);
        assert!(report.get("pi-endomorphism").unwrap().pass);
        assert!(!report.get("pi-equivariance").unwrap().pass);
        assert!(!report.get("pi-cocycle").unwrap().pass);
        assert!(report.get("criteria-equivalence").unwrap().pass);
    }

    #[test]
    fn diamond_is_a_circ_action_on_the_endomorphism_monoid() {
        for brace in small_braces(6) {
            let endos = endomorphism_monoid(brace.dot());
            for chi in &endos {
                assert_eq!(diamond_unchecked(&brace, brace.unit(), chi), *chi);
                for a in 0..brace.order() {
                    for b in 0..brace.order() {
                        let joint =
                            diamond_unchecked(&brace, brace.circ_mul(a, b), chi);
                        let nested = diamond_unchecked(
                            &brace,
                            a,
                            &diamond_unchecked(&brace, b, chi),
                        );
                        assert_eq!(joint, nested);
                    }
                }
            }
        }
    }

    fn restrict_to_orbit(u: &BraceAction, orbit: &[usize]) -> GroupAction {
        let n = u.brace().order();
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                orbit
                    .iter()
                    .map(|&x| orbit.iter().position(|&y| y == u.apply(a, x)).unwrap())
                    .collect()
            })
            .collect();
        GroupAction::new(u.brace().circ(), orbit.len(), rows).unwrap()
    }

    #[test]
    fn universal_orbits_decompose_into_irreducible_actions() {
        for brace in small_braces(6) {
            let u = universal_action(&brace);
            for orbit in orbits(u.action()) {
                let base = orbit[0];
                let chi = u.pi(base).clone();
                let stabilizer: Vec<usize> = (0..brace.order())
                    .filter(|&a| u.apply(a, base) == base)
                    .collect();
                assert!(brace.circ().is_subgroup(&stabilizer));
                let irr = irreducible_action(&brace, &stabilizer, &chi).unwrap();
                assert_eq!(irr.set_size(), orbit.len());
                // equivalent as circ-sets and carrying the same pi family
                let restricted = restrict_to_orbit(&u, &orbit);
                assert!(transitive_action_isomorphism(
                    brace.circ(),
                    &restricted,
                    irr.action()
                )
                .is_some());
                let mut irr_pis: Vec<&[usize]> =
                    irr.pi_family().iter().map(|p| p.table()).collect();
                irr_pis.sort();
                let mut orbit_pis: Vec<&[usize]> =
                    orbit.iter().map(|&x| u.pi(x).table()).collect();
                orbit_pis.sort();
                assert_eq!(irr_pis, orbit_pis);
            }
        }
    }

    #[test]
    fn every_constructor_output_passes_the_validator() {
        for brace in small_braces(6) {
            for act in [
                universal_action(&brace),
                standard_action(&brace),
                trivial_extension(&brace, GroupAction::translation(brace.circ())),
            ] {
                let report =
                    validate_brace_action(&brace, act.action(), act.pi_family());
                assert!(report.all_pass());
            }
        }
    }
}
