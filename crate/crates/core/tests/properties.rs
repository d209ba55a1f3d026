use proptest::collection::vec;
use proptest::prelude::*;
use proptest::sample::subsequence;

use symreg::betti::{
    betti_numbers, expand_orbits, multigraded_betti, MonomialIdealExplicit, DEFAULT_LATTICE_CAP,
};
use symreg::chains::{chain_profile, reg_chain, truncate_to_n, ChainStrategy};
use symreg::check::{
    check_characters, check_cm, check_deletion_recursion, check_filtration_hilbert,
    check_lattice_agreement, check_oracle, check_saturation_slice, check_scm_purity,
};
use symreg::ext::{ext_character_quotient, invariants, is_cohen_macaulay};
use symreg::partition::{enumerate_box_partitions, partitions_of};
use symreg::powers::{
    b_const, bp_exact_fill, bp_feasible, is_symmetric_shifted, is_symmetric_strongly_shifted,
    power_reg_rows, powers_support, BallPackingProblem,
};
use symreg::zset::{z_set, z_set_singleton, z_set_with, ZSetSearch};
use symreg::{part, succ_set, ExponentVector, Field, IdealSpec, Partition};

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn nonempty_partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    vec(1..=max_part, 1..=max_len).prop_map(Partition::from_unsorted)
}

/// Raw generator lists, possibly with redundancy.
fn raw_ideal(max_n: usize, max_part: usize) -> impl Strategy<Value = (usize, Vec<Partition>)> {
    (1..=max_n).prop_flat_map(move |n| (Just(n), vec(nonempty_partition(max_part, n), 1..=4)))
}

fn ideal(max_n: usize, max_part: usize) -> impl Strategy<Value = IdealSpec> {
    raw_ideal(max_n, max_part).prop_map(|(n, g)| IdealSpec::new(n, g).unwrap())
}

/// Every exponent vector in `n` variables of total degree at most `d`.
fn monomials(n: usize, d: usize) -> Vec<ExponentVector> {
    fn go(n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<ExponentVector>) {
        if cur.len() == n {
            out.push(ExponentVector::from_usize(cur));
            return;
        }
        for e in 0..=d {
            cur.push(e);
            go(n, d - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// Membership by divisibility against every permutation of every raw
/// generator.
fn in_orbit_ideal(raw: &[Partition], n: usize, u: &ExponentVector) -> bool {
    raw.iter()
        .any(|g| g.orbit(n).unwrap().iter().any(|v| v.divides(u)))
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conjugation_is_an_involution(x in partition(10, 10)) {
        prop_assert_eq!(x.conjugate().conjugate(), x);
    }

    #[test]
    fn column_split_preserves_size(x in partition(10, 10), c in 0usize..12) {
        prop_assert_eq!(x.truncate_columns(c).size() + x.strip_columns(c).size(), x.size());
    }

    #[test]
    fn strip_columns_drops_conjugate_entries(x in partition(10, 10), r in 0usize..12) {
        let tail: Vec<usize> = x.conjugate().parts().iter().skip(r).copied().collect();
        prop_assert_eq!(x.strip_columns(r).conjugate().parts().to_vec(), tail);
    }

    #[test]
    fn sup_is_a_join(x in partition(6, 6), y in partition(6, 6), z in partition(6, 6)) {
        prop_assert_eq!(x.sup(&y), y.sup(&x));
        prop_assert_eq!(x.sup(&y).sup(&z), x.sup(&y.sup(&z)));
        prop_assert_eq!(x.sup(&x), x.clone());
        prop_assert!(x.leq(&x.sup(&y)));
    }

    #[test]
    fn orbit_size_is_multinomial(x in partition(4, 5), extra in 0usize..2) {
        let n = x.len() + extra;
        let mut mult = std::collections::BTreeMap::new();
        for &p in &x.padded(n) {
            *mult.entry(p).or_insert(0usize) += 1;
        }
        let expected = mult.values().fold(factorial(n), |acc, &m| acc / factorial(m));
        prop_assert_eq!(x.orbit_size(n), expected);
        prop_assert_eq!(x.orbit(n).unwrap().len() as u64, expected);
    }

    #[test]
    fn minimalize_is_idempotent_and_keeps_membership((n, raw) in raw_ideal(4, 4)) {
        let x = IdealSpec::new(n, raw.clone()).unwrap();
        prop_assert_eq!(&IdealSpec::new(n, x.generators().to_vec()).unwrap(), &x);
        for u in monomials(n, 2 * x.max_degree()) {
            prop_assert_eq!(x.contains_monomial(&u), in_orbit_ideal(&raw, n, &u), "{:?}", u);
        }
    }

    #[test]
    fn intersection_agrees_with_membership(
        (n, a, b) in (1usize..=4).prop_flat_map(|n| (
            Just(n),
            vec(nonempty_partition(4, n), 1..=3),
            vec(nonempty_partition(4, n), 1..=3),
        ))
    ) {
        let x = IdealSpec::new(n, a).unwrap();
        let y = IdealSpec::new(n, b).unwrap();
        let both = x.intersection(&y).unwrap();
        for u in monomials(n, 8) {
            prop_assert_eq!(both.contains_monomial(&u), x.contains_monomial(&u) && y.contains_monomial(&u));
        }
    }

    #[test]
    fn saturation_is_a_closure(x in ideal(4, 4), p in 0usize..=4) {
        let s = x.saturate(p);
        prop_assert!(x.leq(&s).unwrap());
        prop_assert_eq!(s.saturate(p), s);
    }

    #[test]
    fn saturation_matches_the_colon(x in ideal(3, 3), p in 0usize..=3) {
        // u ∈ I : I_p^∞ iff u · (Π_{j∈T} e_j)^K ∈ I for every p-subset T,
        // with K past every exponent of a generator.
        let n = x.n();
        prop_assume!(p <= n);
        let big = x.max_first_part() as i64;
        let s = x.saturate(p);
        let subsets: Vec<u32> = (0u32..1 << n).filter(|m| m.count_ones() as usize == p).collect();
        for u in monomials(n, 6) {
            let colon = subsets.iter().all(|&t| {
                let v: Vec<i64> = (0..n).map(|j| u.0[j] + if t & (1 << j) != 0 { big } else { 0 }).collect();
                x.contains_monomial(&ExponentVector(v))
            });
            prop_assert_eq!(s.contains_monomial(&u), colon, "{:?}", u);
        }
    }

    #[test]
    fn succ_lies_strictly_above_z(
        (n, l, c, tail) in (1usize..=4).prop_flat_map(|n| (Just(n), 0..n)).prop_flat_map(|(n, l)| {
            (Just(n), Just(l), 0usize..=4, vec(0usize..=4, n - l - 1))
        })
    ) {
        let mut parts = vec![c; l + 1];
        parts.extend(tail.into_iter().map(|t| t.min(c)));
        let z = Partition::from_unsorted(parts);
        let succ = succ_set(&z, l, n).unwrap();
        for g in succ.generators() {
            prop_assert!(z.leq(g) && *g != z, "{} is not above {}", g, z);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lattice_characterization_agrees(x in ideal(4, 4)) {
        prop_assume!(!x.is_unit());
        check_lattice_agreement(&x).unwrap();
    }

    #[test]
    fn members_are_flat_and_below_w(x in ideal(3, 4)) {
        prop_assume!(!x.is_unit());
        let wide = z_set_with(&x, ZSetSearch { widen_c: 2, unrestricted: true }).unwrap();
        prop_assert_eq!(wide, z_set(&x).unwrap());
    }

    #[test]
    fn tall_columns_bound_l(
        (n, l, cols) in (1usize..=4).prop_flat_map(|n| (Just(n), 0..n)).prop_flat_map(|(n, l)| {
            (Just(n), Just(l), vec(vec(l + 1..=n, 1..=3), 1..=3))
        })
    ) {
        let gens = cols.into_iter().map(|c| Partition::from_unsorted(c).conjugate());
        let x = IdealSpec::new(n, gens).unwrap();
        for pair in z_set(&x).unwrap() {
            prop_assert!(pair.l >= l, "{} has l < {}", pair, l);
        }
    }

    #[test]
    fn squarefree_generator_bounds_lengths(x in ideal(4, 3), p in 1usize..=4) {
        prop_assume!(p <= x.n());
        let x = x.with_generator(Partition::rectangle(1, p)).unwrap();
        for pair in z_set(&x).unwrap() {
            prop_assert!(pair.z.len() < p, "{}", pair);
        }
    }

    #[test]
    fn deletion_recursion_walks_to_the_unit_ideal(x in ideal(4, 4)) {
        prop_assume!(!x.is_unit());
        check_deletion_recursion(&x).unwrap();
    }

    #[test]
    fn saturation_slices_the_z_set(x in ideal(4, 4)) {
        prop_assume!(!x.is_unit());
        check_saturation_slice(&x).unwrap();
    }

    #[test]
    fn filtration_hilbert_identity(x in ideal(4, 4)) {
        prop_assume!(!x.is_unit());
        check_filtration_hilbert(&x, 10).unwrap();
    }

    #[test]
    fn reg_from_characters(x in ideal(4, 4), vbound in 0usize..=2) {
        prop_assume!(!x.is_unit());
        check_characters(&x, vbound).unwrap();
    }

    #[test]
    fn ext_is_concentrated_in_z_set_degrees(x in ideal(4, 3)) {
        prop_assume!(!x.is_unit());
        let n = x.n();
        let ls: Vec<usize> = z_set(&x).unwrap().iter().map(|p| p.l).collect();
        for j in 0..=n {
            let ch = ext_character_quotient(&x, j, 1).unwrap();
            prop_assert_eq!(!ch.is_zero(), ls.iter().any(|&l| l + j == n), "j = {}", j);
        }
    }

    #[test]
    fn cohen_macaulay_criteria_agree(x in ideal(4, 3)) {
        prop_assume!(!x.is_unit());
        if check_cm(&x, Field::Gf2).unwrap() {
            let report = is_cohen_macaulay(&x).unwrap();
            let ls: std::collections::BTreeSet<usize> = z_set(&x).unwrap().iter().map(|p| p.l).collect();
            prop_assert_eq!(ls.into_iter().collect::<Vec<_>>(), vec![report.dim]);
        }
    }

    #[test]
    fn sequential_cm_purity(x in ideal(4, 4)) {
        prop_assume!(!x.is_unit());
        check_scm_purity(&x).unwrap();
    }

    #[test]
    fn oracle_agrees_in_two_characteristics(x in ideal(4, 3)) {
        prop_assume!(!x.is_unit() && x.max_degree() <= 6);
        check_oracle(&x, Field::Gf2).unwrap();
        check_oracle(&x, Field::Prime(32003)).unwrap();
    }

    #[test]
    fn betti_table_ignores_generator_order(x in ideal(3, 3), seed in any::<u64>()) {
        prop_assume!(!x.is_unit());
        let ordered = expand_orbits(&x).unwrap();
        let mut gens = ordered.generators().to_vec();
        let k = gens.len();
        gens.rotate_left(seed as usize % k);
        if seed % 2 == 1 {
            gens.reverse();
        }
        let shuffled = MonomialIdealExplicit::new(x.n(), gens).unwrap();
        prop_assert_eq!(betti_numbers(&ordered, Field::Gf2).unwrap(), betti_numbers(&shuffled, Field::Gf2).unwrap());
    }

    #[test]
    fn squarefree_ideals_have_squarefree_multidegrees(
        (n, gens) in (2usize..=5).prop_flat_map(|n| (Just(n), vec(vec(0i64..=1, n), 1..=5)))
    ) {
        let gens: Vec<ExponentVector> = gens.into_iter().filter(|g| g.contains(&1)).map(ExponentVector).collect();
        prop_assume!(!gens.is_empty());
        let ideal = MonomialIdealExplicit::new(n, gens).unwrap();
        for (_, b) in multigraded_betti(&ideal, Field::Gf2, DEFAULT_LATTICE_CAP).unwrap().keys() {
            prop_assert!(b.0.iter().all(|&e| e <= 1), "{:?}", b);
        }
    }

    #[test]
    fn strongly_shifted_implies_shifted(
        (n, gens) in (1usize..=4).prop_flat_map(|n| (Just(n), 1usize..=6)).prop_flat_map(|(n, d)| {
            let pool = partitions_of(d, n);
            let k = pool.len().min(3);
            (Just(n), subsequence(pool, 1..=k))
        })
    ) {
        let x = IdealSpec::new(n, gens).unwrap();
        if is_symmetric_strongly_shifted(&x) {
            prop_assert!(is_symmetric_shifted(&x));
        }
    }

    #[test]
    fn packing_witnesses_are_valid(
        (n, w, z, d, r) in (1usize..=3).prop_flat_map(|n| (
            Just(n),
            nonempty_partition(3, n),
            partition(9, n),
            1usize..=3,
            0..=n,
        ))
    ) {
        let p = BallPackingProblem::new(n, d, w, z, r).unwrap();
        if let Some(a) = bp_feasible(&p) {
            prop_assert!(a.satisfies(&p));
        }
    }

    #[test]
    fn chain_formula_past_threshold(
        gens in vec(nonempty_partition(3, 3), 1..=3)
    ) {
        let antichain: Vec<Partition> = IdealSpec::new(3, gens).unwrap().generators().to_vec();
        prop_assume!(antichain.iter().all(|x| !x.is_empty()));
        let p = chain_profile(&antichain).unwrap();
        for n in p.threshold..p.threshold + 4 {
            let exact = reg_chain(&p, n, ChainStrategy::Exact).unwrap().reg;
            prop_assert_eq!(exact, p.formula(n), "n = {}", n);
        }
    }

    #[test]
    fn chain_witnesses_strip_into_y(
        gens in vec(nonempty_partition(3, 3), 1..=3)
    ) {
        let antichain: Vec<Partition> = IdealSpec::new(3, gens).unwrap().generators().to_vec();
        prop_assume!(antichain.iter().all(|x| !x.is_empty()));
        let p = chain_profile(&antichain).unwrap();
        let n = p.threshold;
        let zy = z_set(&truncate_to_n(&p.y, n).unwrap()).unwrap();
        let report = invariants(&truncate_to_n(&p.x, n).unwrap()).unwrap();
        let found = report.reg_witnesses.iter().any(|pair| {
            let stripped = symreg::ZPair::new(pair.z.strip_columns(p.w - 1), pair.l);
            pair.z.padded(n).iter().all(|&e| e + 1 >= p.w) && zy.contains(&stripped)
        });
        prop_assert!(found, "no reg witness of X_{} strips into Z(Y_{})", n, n);
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for size in 0..=9 {
        let all = partitions_of(size, 4);
        for a in &all {
            assert!(a.dominance_leq(a));
            for b in &all {
                if a.dominance_leq(b) && b.dominance_leq(a) {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if a.dominance_leq(b) && b.dominance_leq(c) {
                        assert!(a.dominance_leq(c), "{a} {b} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn singleton_z_sets_agree() {
    for n in 1..=4 {
        for x in enumerate_box_partitions(4, n, 0)
            .into_iter()
            .filter(|x| !x.is_empty())
        {
            let ideal = IdealSpec::new(n, [x.clone()]).unwrap();
            assert_eq!(
                z_set(&ideal).unwrap(),
                z_set_singleton(&x, n).unwrap(),
                "{x} in n = {n}"
            );
        }
    }
}

#[test]
fn widening_the_c_range_adds_nothing() {
    for n in 1..=3 {
        for a in enumerate_box_partitions(3, n, 0) {
            for b in enumerate_box_partitions(3, n, 0) {
                let x = IdealSpec::new(n, [a.clone(), b.clone()]).unwrap();
                if x.is_unit() {
                    continue;
                }
                let wide = z_set_with(
                    &x,
                    ZSetSearch {
                        widen_c: 3,
                        unrestricted: true,
                    },
                )
                .unwrap();
                assert_eq!(wide, z_set(&x).unwrap(), "{x}");
            }
        }
    }
}

#[test]
fn power_supports_pass_the_exact_fill_audit() {
    for n in 1..=3 {
        for w in enumerate_box_partitions(3, n, 0)
            .into_iter()
            .filter(|w| !w.is_empty())
        {
            for d in 1..=3 {
                for x in powers_support(&w, d, n).unwrap() {
                    let p = BallPackingProblem::new(n, d, w.clone(), x.clone(), 0).unwrap();
                    assert!(bp_exact_fill(&p).is_some(), "{x} in the support of {w}^{d}");
                }
            }
        }
    }
}

/// `d|w| + b(w)` holds on `[n, n + 3]` except at `w = (3,1)`, `n = 4`,
/// `d = 4`, where the exact value is one higher and the formula only takes
/// over at `d = 5`.
#[test]
fn asymptotic_formula_onset() {
    let mut disagreements = Vec::new();
    for n in 1..=4 {
        for w in enumerate_box_partitions(3, n, 0)
            .into_iter()
            .filter(|w| !w.is_empty())
        {
            for row in power_reg_rows(&w, n, n..=n + 3).unwrap() {
                if !row.agrees {
                    disagreements.push((w.clone(), n, row.d, row.exact, row.asymptotic));
                }
            }
        }
    }
    assert_eq!(disagreements, vec![(part![3, 1], 4, 4, 18, 17)]);
    let x = symreg::powers::power_ideal(&part![3, 1], 4, 4).unwrap();
    assert_eq!(
        symreg::betti::betti_table_of(&x, Field::Gf2).unwrap().reg(),
        18
    );
    let later = power_reg_rows(&part![3, 1], 4, 5..=8).unwrap();
    assert!(later.iter().all(|r| r.agrees), "{later:?}");
}

#[test]
fn small_step_powers_are_dominance_downsets() {
    for n in 1..=3 {
        for w in enumerate_box_partitions(3, n, 0)
            .into_iter()
            .filter(|w| !w.is_empty())
        {
            if b_const(&w, n).unwrap() != 0 {
                continue;
            }
            for d in n..=n + 1 {
                let top = w.scale(d);
                let mut want: Vec<Partition> = partitions_of(top.size(), n)
                    .into_iter()
                    .filter(|x| x.dominance_leq(&top))
                    .collect();
                want.sort();
                let mut got = powers_support(&w, d, n).unwrap();
                got.sort();
                assert_eq!(got, want, "w={w} n={n} d={d}");
            }
        }
    }
}

#[test]
fn b_vanishes_exactly_for_small_steps() {
    for n in 1..=4 {
        for w in enumerate_box_partitions(4, n, 0)
            .into_iter()
            .filter(|w| !w.is_empty())
        {
            let padded = w.padded(n);
            let small = padded.windows(2).all(|p| p[0] - p[1] <= 1);
            assert_eq!(b_const(&w, n).unwrap() == 0, small, "w={w} n={n}");
        }
    }
    assert_eq!(b_const(&part![2, 1], 4).unwrap(), 0);
}
