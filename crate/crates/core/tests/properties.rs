use proptest::prelude::*;

use nilcascade::centgen::UpperRightPair;
use nilcascade::coadj::{
    beta_rank, coadjoint_act_matrix, coadjoint_act_series, is_isotropic, vergne_polarization,
};
use nilcascade::criterion::{nontriviality_verdict, window_rank};
use nilcascade::liealg::NilAlgebra;
use nilcascade::linform::LinearForm;
use nilcascade::random;
use nilcascade::rational::int;
use nilcascade::rootsys::{OrderSpec, Root, SystemType};

fn system() -> impl Strategy<Value = SystemType> {
    prop_oneof![
        Just(SystemType::A),
        Just(SystemType::B),
        Just(SystemType::C),
        Just(SystemType::D)
    ]
}

fn a_form(entries: &[(u32, u32, i64)]) -> LinearForm {
    LinearForm::fin_support(
        entries
            .iter()
            .filter(|(i, j, _)| i != j)
            .map(|&(i, j, v)| (Root::Diff(i.min(j), i.max(j)), int(v))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Rank of `[λ]_p` restricted to a window never drops when the window grows.
    #[test]
    fn window_rank_is_monotone(
        entries in proptest::collection::vec((1u32..8, 1u32..8, -3i64..=3), 0..8),
        i in 1u32..4,
        gap in 1u32..3,
    ) {
        let order = OrderSpec::natural(SystemType::A);
        let lambda = a_form(&entries);
        let p = UpperRightPair::General(i, i + gap);
        let mut last = 0;
        for size in (i + gap)..=9 {
            let window: Vec<u32> = (1..=size).collect();
            let rank = window_rank(&lambda, &p, &order, &window).unwrap().rank;
            prop_assert!(rank >= last);
            last = rank;
        }
    }

    /// `rk β_λ` is constant along coadjoint orbits.
    #[test]
    fn coadjoint_rank_invariance(sys in system(), n in 3usize..5, seed in any::<u64>()) {
        let alg = NilAlgebra::standard(sys, n).unwrap();
        let mut rng = random::rng(seed);
        let mu = random::vector(&mut rng, alg.dim(), 4, 0.6);
        let x = random::vector(&mut rng, alg.dim(), 3, 0.5);
        let moved = coadjoint_act_series(&alg, &x, &mu);
        prop_assert_eq!(beta_rank(&alg, &mu), beta_rank(&alg, &moved));
        prop_assert_eq!(coadjoint_act_matrix(&alg, &x, &mu), moved);
    }

    /// A polarization is maximal isotropic: `dim p = dim g − rk β_λ / 2`.
    #[test]
    fn polarization_dimension(n in 1usize..4, seed in any::<u64>()) {
        let alg = NilAlgebra::heisenberg(n).unwrap();
        let mut rng = random::rng(seed);
        let mu = random::vector(&mut rng, alg.dim(), 4, 0.7);
        let p = vergne_polarization(&alg, &mu);
        prop_assert_eq!(p.basis.len(), alg.dim() - beta_rank(&alg, &mu) / 2);
        prop_assert!(is_isotropic(&alg, &mu, &p.basis));
    }

    /// Verdicts are deterministic, and finitely supported forms on the natural
    /// A order are always decided nonzero.
    #[test]
    fn finsupport_verdicts(entries in proptest::collection::vec((1u32..7, 1u32..7, -3i64..=3), 0..8)) {
        let order = OrderSpec::natural(SystemType::A);
        let lambda = a_form(&entries);
        let v = nontriviality_verdict(&order, &lambda, 8).unwrap();
        prop_assert_eq!(v.label(), "nonzero");
        prop_assert_eq!(nontriviality_verdict(&order, &lambda, 8).unwrap(), v);
    }

    /// Orders with a nonempty cascade always yield a cascade witness.
    #[test]
    fn cascade_orders_are_nonzero(sys in system(), entries in proptest::collection::vec((1u32..7, 1u32..7, -3i64..=3), 0..5)) {
        let order = if sys == SystemType::A { OrderSpec::interleaved(sys) } else { OrderSpec::natural(sys) };
        let lambda = if sys == SystemType::A {
            LinearForm::fin_support(entries.iter().map(|&(i, _, v)| (Root::Diff(2 * i - 1, 2 * i), int(v))))
        } else {
            LinearForm::fin_support(
                entries.iter().filter(|(i, j, _)| i != j).map(|&(i, j, v)| (Root::sum(i, j).unwrap(), int(v))),
            )
        };
        let v = nontriviality_verdict(&order, &lambda, 8).unwrap();
        prop_assert_eq!(&v.to_json()["witness"]["kind"], "cascade");
    }
}
