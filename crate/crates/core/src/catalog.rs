//! Reference groups of small order, used by the enumeration commands and the
//! test suites.
//!
//! The symmetric group on three letters is pinned to one fixed encoding so
//! that every derived table in the crate is reproducible:
//! `0 = id, 1 = (12), 2 = (23), 3 = (31), 4 = (123), 5 = (132)`,
//! with permutations composed as functions (right factor applied first).

use crate::group::FiniteGroup;

pub fn trivial() -> FiniteGroup {
    FiniteGroup::from_table(vec![vec![0]], 0).unwrap()
}

pub fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::from_table(table, 0).unwrap()
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (n, m) = (g.order(), h.order());
    let idx = |a: usize, b: usize| a * m + b;
    let mut table = vec![vec![0; n * m]; n * m];
    for a1 in 0..n {
        for a2 in 0..m {
            for b1 in 0..n {
                for b2 in 0..m {
                    table[idx(a1, a2)][idx(b1, b2)] = idx(g.mul(a1, b1), h.mul(a2, b2));
                }
            }
        }
    }
    FiniteGroup::from_table(table, idx(g.unit(), h.unit())).unwrap()
}

pub fn klein_four() -> FiniteGroup {
    direct_product(&cyclic(2), &cyclic(2))
}

/// The dihedral group of order 2n: element `i + n*j` is rotation^i * flip^j.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let order = 2 * n;
    let idx = |i: usize, j: usize| i + n * j;
    let mut table = vec![vec![0; order]; order];
    for i in 0..n {
        for j in 0..2 {
            for k in 0..n {
                for l in 0..2 {
                    // (r^i f^j)(r^k f^l) = r^(i + k or i - k) f^(j+l)
                    let rot = if j == 0 { (i + k) % n } else { (i + n - k % n) % n };
                    table[idx(i, j)][idx(k, l)] = idx(rot, (j + l) % 2);
                }
            }
        }
    }
    FiniteGroup::from_table(table, 0).unwrap()
}

/// The quaternion group, elements ordered 1, -1, i, -i, j, -j, k, -k.
pub fn quaternion_8() -> FiniteGroup {
    // sign * basis products; basis 0=1, 1=i, 2=j, 3=k
    let basis_mul = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, x) => (x, false),
            (x, 0) => (x, false),
            (x, y) if x == y => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let idx = |basis: usize, neg: bool| 2 * basis + usize::from(neg);
    let mut table = vec![vec![0; 8]; 8];
    for a in 0..8 {
        for b in 0..8 {
            let (pa, na) = (a / 2, a % 2 == 1);
            let (pb, nb) = (b / 2, b % 2 == 1);
            let (p, n) = basis_mul(pa, pb);
            table[a][b] = idx(p, n ^ na ^ nb);
        }
    }
    FiniteGroup::from_table(table, 0).unwrap()
}

/// The symmetric group on {1,2,3} in the fixture encoding documented above.
pub fn symmetric_3() -> FiniteGroup {
    let table = vec![
        vec![0, 1, 2, 3, 4, 5],
        vec![1, 0, 4, 5, 2, 3],
        vec![2, 5, 0, 4, 3, 1],
        vec![3, 4, 5, 0, 1, 2],
        vec![4, 3, 1, 2, 5, 0],
        vec![5, 2, 3, 1, 0, 4],
    ];
    FiniteGroup::from_table(table, 0).unwrap()
}

/// One representative per isomorphism class of groups of the given order,
/// paired with a short name. Supported for orders 1 through 8.
pub fn groups_of_order(n: usize) -> Vec<(String, FiniteGroup)> {
    let named = |name: &str, g: FiniteGroup| (name.to_string(), g);
    match n {
        1 => vec![named("1", trivial())],
        2 => vec![named("Z2", cyclic(2))],
        3 => vec![named("Z3", cyclic(3))],
        4 => vec![named("Z4", cyclic(4)), named("Z2xZ2", klein_four())],
        5 => vec![named("Z5", cyclic(5))],
        6 => vec![named("Z6", cyclic(6)), named("S3", symmetric_3())],
        7 => vec![named("Z7", cyclic(7))],
        8 => vec![
            named("Z8", cyclic(8)),
            named("Z4xZ2", direct_product(&cyclic(4), &cyclic(2))),
            named("Z2xZ2xZ2", direct_product(&klein_four(), &cyclic(2))),
            named("D4", dihedral(4)),
            named("Q8", quaternion_8()),
        ],
        _ => panic!("no group catalog for order {n}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::are_isomorphic;

    #[test]
    fn catalog_entries_are_pairwise_nonisomorphic() {
        for n in 1..=8 {
            let groups = groups_of_order(n);
            for (i, (_, g)) in groups.iter().enumerate() {
                assert_eq!(g.order(), n);
                for (_, h) in &groups[i + 1..] {
                    assert!(!are_isomorphic(g, h));
                }
            }
        }
    }

    #[test]
    fn structure_spot_checks() {
        assert!(klein_four().is_abelian());
        assert!(!dihedral(4).is_abelian());
        assert!(!quaternion_8().is_abelian());
        let q = quaternion_8();
        // -1 is the unique element of order 2 in the quaternion group
        let involutions: Vec<usize> =
            q.elements().filter(|&a| a != q.unit() && q.mul(a, a) == q.unit()).collect();
        assert_eq!(involutions, vec![1]);
        let s3 = symmetric_3();
        assert_eq!(s3.element_order(4), 3);
        assert_eq!(s3.element_order(1), 2);
    }
}
