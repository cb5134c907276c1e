//! Kostant cascades: the closed forms for finite ranks and the inductive
//! construction over a linear order.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::rootsys::{OrderSpec, Root, SystemType};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CascadeState {
    /// `N_k`
    pub consumed: BTreeSet<u32>,
    /// `β_1, …, β_k`
    pub emitted: Vec<Root>,
}

/// One step of the inductive table; `None` once the required extremum is missing.
pub fn cascade_step(state: &CascadeState, order: &OrderSpec) -> Option<(Root, CascadeState)> {
    let excl = &state.consumed;
    let (root, new): (Root, Vec<u32>) = match order.system {
        SystemType::A => {
            let i = order.max_remaining(excl)?;
            let j = order.min_remaining(excl)?;
            if i == j {
                return None;
            }
            (Root::Diff(i, j), vec![i, j])
        }
        SystemType::C => {
            let i = order.max_remaining(excl)?;
            (Root::Double(i), vec![i])
        }
        SystemType::B | SystemType::D => {
            let i = order.max_remaining(excl)?;
            let mut with_i = excl.clone();
            with_i.insert(i);
            let j = order.max_remaining(&with_i)?;
            (Root::sum(i, j).ok()?, vec![i, j])
        }
    };
    let mut next = state.clone();
    next.consumed.extend(new);
    next.emitted.push(root);
    Some((root, next))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cascade {
    pub roots: Vec<Root>,
    /// No cascade root exists beyond `roots`.
    pub terminated: bool,
}

/// The first `min(limit, |B|)` cascade roots.
pub fn cascade(order: &OrderSpec, limit: usize) -> Cascade {
    let (state, terminated) = run(order, limit);
    Cascade {
        roots: state.emitted,
        terminated,
    }
}

/// State after at most `limit` steps, and whether the cascade has ended.
pub fn run(order: &OrderSpec, limit: usize) -> (CascadeState, bool) {
    let mut state = CascadeState::default();
    while state.emitted.len() < limit {
        match cascade_step(&state, order) {
            Some((_, next)) => state = next,
            None => return (state, true),
        }
    }
    let terminated = cascade_step(&state, order).is_none();
    (state, terminated)
}

/// The Kostant cascade of the standard finite root system of rank `n`.
pub fn finite_cascade(system: SystemType, n: usize) -> Result<Vec<Root>> {
    system.check_rank(n)?;
    let n = n as u32;
    let mut out = Vec::new();
    match system {
        SystemType::A => out.extend((1..=n / 2).map(|i| Root::Diff(i, n - i + 1))),
        SystemType::C => out.extend((1..=n).map(Root::Double)),
        SystemType::B | SystemType::D => {
            for i in 1..=n / 2 {
                out.push(Root::Diff(2 * i - 1, 2 * i));
                out.push(Root::Sum(2 * i - 1, 2 * i));
            }
            if system == SystemType::B && n % 2 == 1 {
                out.push(Root::Short(n));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{positive_roots, strongly_orthogonal, IndexStream};
    use proptest::prelude::*;

    #[test]
    fn step_examples() {
        let s = CascadeState::default();
        let (r, next) = cascade_step(&s, &OrderSpec::interleaved(SystemType::A)).unwrap();
        assert_eq!(r, Root::Diff(1, 2));
        assert_eq!(next.consumed, [1, 2].into());
        assert!(cascade_step(&s, &OrderSpec::natural(SystemType::A)).is_none());
        let (r, next) = cascade_step(&s, &OrderSpec::natural(SystemType::C)).unwrap();
        assert_eq!(r, Root::Double(1));
        assert_eq!(next.consumed, [1].into());
    }

    #[test]
    fn cascade_examples() {
        let c = cascade(&OrderSpec::interleaved(SystemType::A), 3);
        assert_eq!(
            c.roots,
            vec![Root::Diff(1, 2), Root::Diff(3, 4), Root::Diff(5, 6)]
        );
        assert!(!c.terminated);
        let c = cascade(&OrderSpec::natural(SystemType::A), 3);
        assert!(c.roots.is_empty() && c.terminated);
        let c = cascade(&OrderSpec::natural(SystemType::D), 2);
        assert_eq!(c.roots, vec![Root::Sum(1, 2), Root::Sum(3, 4)]);
        assert!(!c.terminated);
        let c = cascade(&OrderSpec::natural(SystemType::C), 3);
        assert_eq!(
            c.roots,
            vec![Root::Double(1), Root::Double(2), Root::Double(3)]
        );
        let c = cascade(&OrderSpec::reverse(SystemType::B), 3);
        assert!(c.roots.is_empty() && c.terminated);
    }

    #[test]
    fn finite_order_cascade_terminates() {
        let o = OrderSpec::finite(SystemType::A, 5);
        let c = cascade(&o, 10);
        assert_eq!(c.roots, vec![Root::Diff(1, 5), Root::Diff(2, 4)]);
        assert!(c.terminated);
        let o = OrderSpec::finite(SystemType::D, 5);
        let c = cascade(&o, 10);
        assert_eq!(c.roots, vec![Root::Sum(1, 2), Root::Sum(3, 4)]);
        assert!(c.terminated);
    }

    #[test]
    fn finite_examples() {
        assert_eq!(
            finite_cascade(SystemType::A, 4).unwrap(),
            vec![Root::Diff(1, 4), Root::Diff(2, 3)]
        );
        assert_eq!(
            finite_cascade(SystemType::C, 3).unwrap(),
            vec![Root::Double(1), Root::Double(2), Root::Double(3)]
        );
        assert_eq!(
            finite_cascade(SystemType::B, 3).unwrap(),
            vec![Root::Diff(1, 2), Root::Sum(1, 2), Root::Short(3)]
        );
        assert!(finite_cascade(SystemType::D, 1).is_err());
    }

    #[test]
    fn finite_cascades_are_maximal_strongly_orthogonal() {
        for system in SystemType::ALL {
            for n in system.min_rank()..=6 {
                let b = finite_cascade(system, n).unwrap();
                for (x, y) in b.iter().zip(b.iter().skip(1)) {
                    assert!(strongly_orthogonal(system, x, y));
                }
                for x in &b {
                    for y in &b {
                        assert!(
                            x == y || strongly_orthogonal(system, x, y),
                            "{system}{n} {x} {y}"
                        );
                    }
                }
                for r in positive_roots(system, n).unwrap() {
                    if !b.contains(&r) {
                        assert!(
                            b.iter().any(|x| !strongly_orthogonal(system, x, &r)),
                            "{system}{n} {r}"
                        );
                    }
                }
            }
        }
    }

    fn arb_order() -> impl Strategy<Value = OrderSpec> {
        let sys = prop_oneof![
            Just(SystemType::A),
            Just(SystemType::B),
            Just(SystemType::C),
            Just(SystemType::D)
        ];
        (sys, 0..5usize).prop_map(|(s, k)| match k {
            0 => OrderSpec::natural(s),
            1 => OrderSpec::reverse(s),
            2 => OrderSpec::interleaved(s),
            3 => OrderSpec::new(s, IndexStream::arith(3, 1), IndexStream::list([2, 1])).unwrap(),
            _ => {
                OrderSpec::new(s, IndexStream::list([4, 2]), IndexStream::list([1, 3, 5])).unwrap()
            }
        })
    }

    proptest! {
        #[test]
        fn cascade_invariants(order in arb_order(), k in 0usize..8) {
            let a = cascade(&order, k);
            let b = cascade(&order, k + 1);
            prop_assert_eq!(&b.roots[..a.roots.len()], &a.roots[..]);
            if a.terminated {
                prop_assert_eq!(&a.roots, &b.roots);
                prop_assert!(b.terminated);
            }
            for x in &b.roots {
                prop_assert!(order.is_positive(x).unwrap());
                for y in &b.roots {
                    prop_assert!(x == y || strongly_orthogonal(order.system, x, y));
                }
            }
            let (state, _) = run(&order, k);
            let consumed: BTreeSet<u32> = state.emitted.iter().flat_map(|r| r.indices()).collect();
            prop_assert_eq!(consumed, state.consumed);
        }
    }
}
