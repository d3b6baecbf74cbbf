//! Checks the star-graph reduction through the public API: every finite
//! blossom of the star graph maps to a parity-valid inequality on the
//! original graph whose odd-cut form equals the blossom value.

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use oddcut_core::random::{random_case, CaseSpec};
use oddcut_core::{
    beta_min_f, blossom_lhs_rhs, build_star_graph, separate, BigRational, EdgeSet, Mode, Outcome, VertexSet,
};

#[test]
fn finite_star_blossoms_map_to_inequalities() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut mapped = 0;
    for mode in [Mode::Capacitated, Mode::Perfect] {
        for _ in 0..150 {
            let (inst, x) = random_case(&mut rng, mode, CaseSpec::default());
            let star = build_star_graph(&inst, &x).unwrap();
            assert_eq!(star.terminals.len() % 2, 0);
            let g = inst.graph();
            let n = g.vertex_count();
            for bits in 1u32..1 << n {
                let w: VertexSet = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
                let found = beta_min_f(&star.graph, &star.c, &star.c_prime, &star.terminals, &w).unwrap();
                let complement = star.graph.complement(&w);
                assert!(complement.contains(&star.apex));
                let other = beta_min_f(&star.graph, &star.c, &star.c_prime, &star.terminals, &complement).unwrap();
                assert_eq!(found.beta, other.beta);

                let Some(beta) = found.beta.as_finite().filter(|_| found.is_blossom) else { continue };
                assert!(found.teeth.iter().all(|&e| !star.is_apex_edge(e)));
                let mut teeth: EdgeSet = found.teeth.clone();
                for e in g.delta(&w).unwrap() {
                    let u = inst.u(e).unwrap();
                    let xe = x.get(e);
                    if u % 2 == 0 && &(BigRational::from_integer(u.into()) - xe) < xe {
                        teeth.insert(e);
                    }
                }
                let eval = blossom_lhs_rhs(&inst, &x, &w, &teeth).unwrap();
                assert_eq!(&eval.oddcut_lhs, beta);
                mapped += 1;
            }
        }
    }
    assert!(mapped > 1000, "only {mapped} blossoms mapped");
}

#[test]
fn returned_inequalities_exclude_the_apex() {
    let mut rng = ChaCha8Rng::seed_from_u64(78);
    for mode in [Mode::Capacitated, Mode::Perfect, Mode::Uncapacitated] {
        for _ in 0..300 {
            let (inst, x) = random_case(&mut rng, mode, CaseSpec { slack_prob: 0.0, ..CaseSpec::default() });
            let Outcome::Blossoms(report) = separate(&inst, &x).unwrap() else { panic!("feasible point") };
            let Some(v) = report.violated else { continue };
            let n = inst.graph().vertex_count();
            assert!(v.handle.iter().all(|&w| w < n));
            assert!(v.teeth.iter().all(|&e| e < inst.graph().edge_count()));
            assert!(v.violation > BigRational::zero());
            assert_eq!(v.violation, (BigRational::one() - &v.beta) / BigRational::from_integer(2.into()));
            let u_f: u64 = v.teeth.iter().map(|&e| inst.u(e).unwrap_or(0)).sum();
            assert_eq!((inst.b_of(&v.handle) + u_f) % 2, 1);
        }
    }
}
