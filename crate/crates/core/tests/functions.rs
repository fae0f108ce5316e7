mod common;

use std::sync::Arc;

use common::{brute_distance, diamond, random, simple_paths, terminal, weight_sum};
use pathfn::verify::anti_risk_direct;
use pathfn::{
    anti_risk, blocked_cost, classic_distance, expected_cost, path_value, Builtin, DetourTable, ExtReal, GenMode,
    Path, PathFunction, RoadKey,
};
use proptest::prelude::*;

fn diamond_table() -> Arc<DetourTable> {
    Arc::new(DetourTable::new(Arc::new(diamond())).unwrap())
}

fn path(keys: &[usize]) -> Path {
    let keys: Vec<_> = keys.iter().map(|&k| RoadKey(k)).collect();
    Path::from_roads(&diamond(), 0, &keys).unwrap()
}

#[test]
fn detour_around_a_t() {
    let t = diamond_table();
    assert_eq!(t.distance(RoadKey(6), 0, 3).unwrap(), ExtReal::finite(4.0));
    assert_eq!(brute_distance(&diamond(), Some(RoadKey(6)), 0, 3), ExtReal::finite(4.0));
}

#[test]
fn anti_risk_on_diamond() {
    let g = diamond();
    let r = anti_risk(diamond_table());
    assert_eq!(path_value(&r, &g, &path(&[0, 6])).unwrap(), ExtReal::finite(4.0));
    assert_eq!(path_value(&r, &g, &path(&[0])).unwrap(), ExtReal::finite(3.0));
    assert_eq!(path_value(&r, &g, &path(&[])).unwrap(), ExtReal::ZERO);
}

#[test]
fn blocked_and_expected_on_diamond() {
    let g = diamond();
    let c = blocked_cost(diamond_table(), 0.5).unwrap();
    let e = expected_cost(diamond_table(), 0.5).unwrap();
    assert_eq!(path_value(&c, &g, &path(&[0])).unwrap(), ExtReal::finite(2.5));
    assert_eq!(path_value(&e, &g, &path(&[0])).unwrap(), ExtReal::finite(2.0));
}

#[test]
fn expected_cost_tends_to_classic_for_small_p() {
    let g = diamond();
    let e = expected_cost(diamond_table(), 0.01).unwrap();
    for keys in simple_paths(&g, 0) {
        let Some((&last, front)) = keys.split_last() else { continue };
        let p = Path::from_roads(&g, 0, front).unwrap();
        let ep = path_value(&e, &g, &p).unwrap();
        let road = g.road(last).unwrap();
        let son = e.extend(ep, &p, road);
        assert!(son.distance(ep + road.weight) < 0.1, "{p}: {son} vs {}", ep + road.weight);
    }
}

#[test]
fn probability_must_be_open_unit() {
    for p in [0.0, 1.0, -0.2, 1.5, f64::NAN] {
        assert!(blocked_cost(diamond_table(), p).is_err());
        assert!(expected_cost(diamond_table(), p).is_err());
    }
    assert!(Builtin::from_name("blocked-cost", None).is_err());
    assert!(Builtin::from_name("expected-cost", None).is_err());
    assert!(Builtin::from_name("classic", None).is_ok());
    assert!(Builtin::from_name("nope", None).is_err());
}

#[test]
fn classic_equals_resummed_weights() {
    let g = random(11, 7, 14, GenMode::Directed);
    let d = classic_distance(&g);
    for keys in simple_paths(&g, 0) {
        let p = Path::from_roads(&g, 0, &keys).unwrap();
        assert_eq!(path_value(&d, &g, &p).unwrap(), ExtReal::finite(weight_sum(&g, &keys)));
    }
}

#[test]
fn detour_matches_brute_force() {
    for seed in 0..25 {
        let n = 3 + seed as usize % 5;
        let mode = if seed % 2 == 0 { GenMode::Directed } else { GenMode::Undirected };
        let g = Arc::new(random(seed, n, 2 * n, mode));
        let table = DetourTable::new(g.clone()).unwrap();
        for r in g.roads() {
            for x in 0..n {
                for y in 0..n {
                    assert_eq!(
                        table.distance(r.key, x, y).unwrap(),
                        brute_distance(&g, Some(r.key), x, y),
                        "seed {seed} road {} {x}->{y}",
                        r.key
                    );
                }
            }
        }
        assert!(table.cached_runs() <= g.m() * n);
    }
}

#[test]
fn detour_rejects_negative_weights() {
    let mut b = pathfn::GraphBuilder::new(2);
    b.arc(0, 1, -1.0).unwrap();
    assert!(DetourTable::new(Arc::new(b.build())).is_err());
}

#[test]
fn anti_risk_recurrence_matches_direct_formula() {
    for seed in 0..50 {
        let n = 3 + seed as usize % 5;
        let g = Arc::new(random(seed, n, 2 * n, GenMode::Undirected));
        let r = anti_risk(Arc::new(DetourTable::new(g.clone()).unwrap()));
        for keys in simple_paths(&g, 0) {
            let p = Path::from_roads(&g, 0, &keys).unwrap();
            let folded = path_value(&r, &g, &p).unwrap();
            let direct = anti_risk_direct(&g, &p, |k, x, y| brute_distance(&g, Some(k), x, y));
            assert!(folded.approx_eq(direct, 1e-9), "seed {seed} {p}: {folded} vs {direct}");
        }
    }
}

fn all_functions(g: &Arc<pathfn::Graph>) -> Vec<Box<dyn PathFunction>> {
    [
        Builtin::Classic,
        Builtin::AntiRisk,
        Builtin::BlockedCost(0.3),
        Builtin::ExpectedCost(0.7),
    ]
    .into_iter()
    .map(|b| b.build(g).unwrap())
    .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fold_is_prefix_consistent(seed in any::<u64>(), n in 2usize..7) {
        let g = Arc::new(random(seed, n, 2 * n, GenMode::Directed));
        for f in all_functions(&g) {
            for keys in simple_paths(&g, 0) {
                let Some((&last, front)) = keys.split_last() else { continue };
                let father = Path::from_roads(&g, 0, front).unwrap();
                let whole = Path::from_roads(&g, 0, &keys).unwrap();
                let stepped = f.extend(path_value(&*f, &g, &father).unwrap(), &father, g.road(last).unwrap());
                prop_assert_eq!(path_value(&*f, &g, &whole).unwrap(), stepped);
                prop_assert_eq!(terminal(&g, 0, &keys), whole.terminal());
            }
        }
    }
}
