//! Product constructions on Y = A x X.
//!
//! Starting from a generalized braided action (X, act, k) of a group with
//! braiding (A, o, r), the set Y = A x X carries three circ-actions sharing
//! one amplified reflection map
//!
//! ```text
//! k_Y = (r x id)(id x k)(r x id),
//! ```
//!
//! namely the absorbing extension `a * (b, x) = (a o b, x)`, its k-twisted
//! variant, and the r-twisted amplification of the base action. Each of the
//! three, paired with k_Y, is again generalized braided, so iterating yields
//! reflection-equation solutions over A^d x X. Pairs (a, x) are flattened to
//! the index a * |X| + x at every level.

use thiserror::Error;

use crate::braiding::{
    twisted_product_from_braiding, BraidingError, BraidingOperator, TwistedProductGroup,
};
use crate::group::GroupAction;
use crate::reflection::{check_braided_action, BraidedActionReport, ReflectionMap};
use crate::report::{Check, CheckReport};

const PRODUCT_SIZE_BOUND: usize = 4096;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ProductError {
    #[error("the base triple is not a generalized braided action:\n{0}")]
    NotGeneralizedBraided(CheckReport),
    #[error("product set of size {0} exceeds the bound {1}")]
    OrderTooLarge(usize, usize),
    #[error("the two actions do not braid-commute in the given order")]
    NotBraidCommuting,
    #[error("braiding-level failure: {0}")]
    Braiding(#[from] BraidingError),
    #[error("a constructed product action failed validation: {0}")]
    Action(#[from] crate::group::ActionError),
}

/// The three product actions on Y = A x X together with the shared
/// amplified reflection map and the checker verdicts for each pairing.
#[derive(Debug, Clone)]
pub struct ProductActionBundle {
    base_act: GroupAction,
    base_k: ReflectionMap,
    y_size: usize,
    k_y: ReflectionMap,
    m_triv: GroupAction,
    m_k: GroupAction,
    m_r: GroupAction,
    verdict_triv: BraidedActionReport,
    verdict_k: BraidedActionReport,
    verdict_r: BraidedActionReport,
}

impl ProductActionBundle {
    pub fn y_size(&self) -> usize {
        self.y_size
    }

    pub fn base_action(&self) -> &GroupAction {
        &self.base_act
    }

    pub fn base_k(&self) -> &ReflectionMap {
        &self.base_k
    }

    pub fn k_y(&self) -> &ReflectionMap {
        &self.k_y
    }

    pub fn m_triv(&self) -> &GroupAction {
        &self.m_triv
    }

    pub fn m_k(&self) -> &GroupAction {
        &self.m_k
    }

    pub fn m_r(&self) -> &GroupAction {
        &self.m_r
    }

    /// Checker verdicts for (m_triv, k_Y), (m_k, k_Y), (m_r, k_Y): whether
    /// each product action is braided or only generalized braided is
    /// recorded per instance, never assumed.
    pub fn verdicts(&self) -> [&BraidedActionReport; 3] {
        [&self.verdict_triv, &self.verdict_k, &self.verdict_r]
    }

    #[inline]
    pub fn pair_index(&self, a: usize, x: usize) -> usize {
        a * self.base_act.set_size() + x
    }

    #[inline]
    pub fn pair_of(&self, y: usize) -> (usize, usize) {
        (y / self.base_act.set_size(), y % self.base_act.set_size())
    }
}

/// Builds the three product actions and the amplified reflection map over
/// Y = A x X, verifying every claimed property exhaustively:
/// the base must be generalized braided, each product action must validate
/// as a group action, and each pairing with k_Y must be generalized braided.
pub fn build_products(
    r: &BraidingOperator,
    act: &GroupAction,
    k: &ReflectionMap,
) -> Result<ProductActionBundle, ProductError> {
    let base = check_braided_action(r, act, k);
    if !base.is_generalized() {
        return Err(ProductError::NotGeneralizedBraided(base.to_report()));
    }
    let g = r.circ();
    let n = g.order();
    let m = act.set_size();
    let y = n * m;
    if y > PRODUCT_SIZE_BOUND {
        return Err(ProductError::OrderTooLarge(y, PRODUCT_SIZE_BOUND));
    }
    let idx = |b: usize, x: usize| b * m + x;

    let mut k_y = Vec::with_capacity(n * y);
    let mut triv = Vec::with_capacity(n * y);
    let mut kk = Vec::with_capacity(n * y);
    let mut rr = Vec::with_capacity(n * y);
    for a in 0..n {
        for b in 0..n {
            for x in 0..m {
                let (b1, a1) = r.apply(a, b);
                let (c, x1) = k.apply(a1, x);
                let (a2, b2) = r.apply(b1, c);
                k_y.push((a2, idx(b2, x1)));
                triv.push(idx(g.mul(a, b), x));
                kk.push(idx(g.mul(b1, c), x1));
                rr.push(idx(b1, act.apply(a1, x)));
            }
        }
    }
    let k_y = ReflectionMap::new(g.clone(), y, k_y).expect("amplified map is well formed");
    let m_triv = GroupAction::from_flat(g, y, triv)?;
    let m_k = GroupAction::from_flat(g, y, kk)?;
    let m_r = GroupAction::from_flat(g, y, rr)?;

    let verdict_triv = check_braided_action(r, &m_triv, &k_y);
    let verdict_k = check_braided_action(r, &m_k, &k_y);
    let verdict_r = check_braided_action(r, &m_r, &k_y);
    for v in [&verdict_triv, &verdict_k, &verdict_r] {
        if !v.is_generalized() {
            return Err(ProductError::NotGeneralizedBraided(v.to_report()));
        }
    }

    Ok(ProductActionBundle {
        base_act: act.clone(),
        base_k: k.clone(),
        y_size: y,
        k_y,
        m_triv,
        m_k,
        m_r,
        verdict_triv,
        verdict_k,
        verdict_r,
    })
}

/// Report of [`check_braid_commute`]: the relation is ordered, so the
/// reverse pairing is computed separately for information.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidCommuteReport {
    pub given_order: Check,
    pub reversed_order: Check,
}

impl BraidCommuteReport {
    pub fn all_pass(&self) -> bool {
        self.given_order.pass
    }
}

/// Checks whether (first, second) braid-commute:
/// `first(a, second(b, y)) = second(a |> b, first(a <| b, y))` for all
/// a, b, y. The full tuple space is always verified; no restricted-subspace
/// shortcut is applied.
pub fn check_braid_commute(
    r: &BraidingOperator,
    first: &GroupAction,
    second: &GroupAction,
) -> BraidCommuteReport {
    BraidCommuteReport {
        given_order: Check::from_witness(
            "braid-commute",
            braid_commute_witness(r, first, second),
        ),
        reversed_order: Check::from_witness(
            "braid-commute-reversed",
            braid_commute_witness(r, second, first),
        ),
    }
}

fn braid_commute_witness(
    r: &BraidingOperator,
    first: &GroupAction,
    second: &GroupAction,
) -> Option<Vec<usize>> {
    let n = r.order();
    let y_size = first.set_size();
    assert_eq!(second.set_size(), y_size);
    for a in 0..n {
        for b in 0..n {
            let (b1, a1) = r.apply(a, b);
            for y in 0..y_size {
                if first.apply(a, second.apply(b, y)) != second.apply(b1, first.apply(a1, y))
                {
                    return Some(vec![a, b, y]);
                }
            }
        }
    }
    None
}

/// Fuses a braid-commuting pair into an action of the twisted product group:
/// `theta((a, b), y) = second(a, first(b, y))`, with (a, b) encoded as in
/// [`TwistedProductGroup`]. The pair must braid-commute as (first, second).
pub fn theta_from_pair(
    r: &BraidingOperator,
    first: &GroupAction,
    second: &GroupAction,
) -> Result<(TwistedProductGroup, GroupAction), ProductError> {
    if !check_braid_commute(r, first, second).all_pass() {
        return Err(ProductError::NotBraidCommuting);
    }
    let tw = twisted_product_from_braiding(r)?;
    let n = r.order();
    let y_size = first.set_size();
    let mut theta = Vec::with_capacity(n * n * y_size);
    for a in 0..n {
        for b in 0..n {
            for y in 0..y_size {
                theta.push(second.apply(a, first.apply(b, y)));
            }
        }
    }
    let theta = GroupAction::from_flat(tw.group(), y_size, theta)?;
    Ok((tw, theta))
}

/// Splits a twisted-product action back into the braid-commuting pair it
/// came from: restriction along b -> (e, b) gives the first action and along
/// a -> (a, e) gives the second.
pub fn split_theta(
    tw: &TwistedProductGroup,
    theta: &GroupAction,
) -> (GroupAction, GroupAction) {
    let n = tw.base_order();
    let y_size = theta.set_size();
    let e = tw.group().unit() % n; // unit is (e, e), so both legs share it
    let first = (0..n)
        .flat_map(|b| (0..y_size).map(move |y| (b, y)))
        .map(|(b, y)| theta.apply(tw.pair_index(e, b), y))
        .collect();
    let second = (0..n)
        .flat_map(|a| (0..y_size).map(move |y| (a, y)))
        .map(|(a, y)| theta.apply(tw.pair_index(a, e), y))
        .collect();
    let restrict = |flat: Vec<usize>| {
        GroupAction::from_flat(
            &crate::group::FiniteGroup::from_table(
                // restrictions are actions of the base group; rebuild it from
                // the twisted product's embedded copy
                restricted_base_table(tw),
                e,
            )
            .expect("embedded base group is a group"),
            y_size,
            flat,
        )
        .expect("restriction of an action is an action")
    };
    (restrict(first), restrict(second))
}

fn restricted_base_table(tw: &TwistedProductGroup) -> Vec<Vec<usize>> {
    let n = tw.base_order();
    let g = tw.group();
    (0..n)
        .map(|a| (0..n).map(|b| g.mul(tw.j1(a), tw.j1(b)) / n).collect())
        .collect()
}

/// Iterates [`build_products`], carrying the k-twisted action to the next
/// level, and returns the reflection maps at depths 0..=depth (depth 0 is
/// the base k). Every returned map has passed the generalized-braided
/// checks, reflection equation included.
pub fn iterate_amplification(
    r: &BraidingOperator,
    act: &GroupAction,
    k: &ReflectionMap,
    depth: usize,
) -> Result<Vec<ReflectionMap>, ProductError> {
    let base = check_braided_action(r, act, k);
    if !base.is_generalized() {
        return Err(ProductError::NotGeneralizedBraided(base.to_report()));
    }
    let final_size = r
        .order()
        .checked_pow(depth as u32)
        .and_then(|p| p.checked_mul(act.set_size()))
        .ok_or(ProductError::OrderTooLarge(usize::MAX, PRODUCT_SIZE_BOUND))?;
    if final_size > PRODUCT_SIZE_BOUND {
        return Err(ProductError::OrderTooLarge(final_size, PRODUCT_SIZE_BOUND));
    }
    let mut maps = vec![k.clone()];
    let mut act = act.clone();
    let mut k = k.clone();
    for _ in 0..depth {
        let bundle = build_products(r, &act, &k)?;
        act = bundle.m_k.clone();
        k = bundle.k_y.clone();
        maps.push(k.clone());
    }
    Ok(maps)
}
