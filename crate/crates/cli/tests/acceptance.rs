//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero if
//! any criterion fails. Set `PPT_ACCEPT_N9=1` to extend the count check to n = 9.

use std::collections::BTreeSet;
use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::Signed;
use pseudotri::graph::hull_edges;
use pseudotri::rigidity::pinned_flex;
use pseudotri::sample::{random_point_set, rng_from_seed};
use pseudotri::{
    brute_force_all_pseudo_triangulations, brute_force_maximal_pointed, canonical_ppt,
    check_conjecture, enumerate_ppt, flip, is_expansive, mechanism_motion, min_max_degree, rank,
    rigidity_matrix, validate, EdgeKey, Limits, PointSet,
};

type Set = Arc<PointSet>;

fn set(coords: &[(i64, i64)]) -> Set {
    Arc::new(PointSet::from_coords(coords).unwrap())
}

fn catalan(k: u64) -> u64 {
    (0..k).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

/// Convex n-gon: points on the parabola y = x^2.
fn convex_polygon(n: usize) -> Set {
    let coords: Vec<(i64, i64)> = (0..n as i64).map(|i| (3 * i, 3 * i * i)).collect();
    set(&coords)
}

fn triangle_plus_interior() -> Set {
    set(&[(0, 0), (4, 0), (0, 4), (1, 1)])
}

/// A large triangle with a small cluster of `k` interior points.
fn triangle_with_cluster(k: usize) -> Set {
    let cluster = [(40, 30), (47, 33), (43, 38), (37, 36), (45, 28)];
    let mut coords = vec![(0, 0), (100, 0), (40, 90)];
    coords.extend_from_slice(&cluster[..k]);
    set(&coords)
}

fn structured() -> Vec<Set> {
    let mut out: Vec<Set> = (3..=8).map(convex_polygon).collect();
    out.push(triangle_plus_interior());
    out.extend((2..=5).map(triangle_with_cluster));
    // Two nested triangles and a square around a pair of points.
    out.push(set(&[(0, 0), (12, 0), (6, 11), (5, 3), (7, 3), (6, 6)]));
    out.push(set(&[(0, 0), (10, 0), (10, 10), (0, 10), (4, 5), (6, 3)]));
    out
}

fn random_sets(count: u64, n_lo: usize, n_hi: usize, salt: u64) -> Vec<Set> {
    (0..count)
        .map(|i| {
            let n = n_lo + (i as usize) % (n_hi - n_lo + 1);
            Arc::new(random_point_set(n, &mut rng_from_seed(salt + i)))
        })
        .collect()
}

/// Every structured set plus random sets with `n <= max_n`.
fn suite(max_n: usize) -> Vec<Set> {
    let mut all = structured();
    all.extend(random_sets(30, 4, 8, 77_000));
    all.retain(|s| s.len() <= max_n);
    all
}

fn within(start: Instant, limit: Duration, what: &str) -> String {
    let elapsed = start.elapsed();
    assert!(elapsed < limit, "{what} took {elapsed:?}, limit {limit:?}");
    format!("{:.2}s", elapsed.as_secs_f64())
}

fn c1_regularity() -> String {
    let start = Instant::now();
    let sets = random_sets(200, 3, 30, 1_000);
    for ps in &sets {
        let n = ps.len();
        let t = canonical_ppt(ps.clone()).unwrap();
        let report = validate(t.graph());
        assert!(report.is_pseudo_triangulation && report.is_pointed, "{:?}", report.violations);
        assert_eq!(report.face_count, n - 2);
        assert_eq!(report.edge_count, 2 * n - 3);
    }
    format!("200 sets, n in [3, 30], {}", within(start, Duration::from_secs(10), "regularity"))
}

fn c2_minimality() -> String {
    let start = Instant::now();
    let limits = Limits::default();
    let mut sets: Vec<Set> = structured().into_iter().filter(|s| s.len() <= 6).collect();
    sets.extend(random_sets(16, 4, 6, 2_000));
    assert!(sets.len() >= 20);
    let mut total = 0;
    for ps in &sets {
        let n = ps.len();
        let all = brute_force_all_pseudo_triangulations(ps.clone(), &limits).unwrap();
        let min = all.iter().map(|&(e, _)| e).min().unwrap();
        assert_eq!(min, 2 * n - 3);
        for &(edges, pointed) in &all {
            assert_eq!(edges == 2 * n - 3, pointed, "n = {n}: {edges} edges, pointed = {pointed}");
        }
        total += all.len();
    }
    format!(
        "{} sets, {total} pseudo-triangulations, {}",
        sets.len(),
        within(start, Duration::from_secs(120), "minimality")
    )
}

fn c3_conjecture() -> String {
    let start = Instant::now();
    let extended = std::env::var("PPT_ACCEPT_N9").is_ok_and(|v| v == "1");
    let max_n = if extended { 9 } else { 8 };
    let limits = Limits::default();
    let mut sets = random_sets(100, 4, 8, 3_000);
    sets.extend(structured());
    if extended {
        sets.extend(random_sets(10, 9, 9, 9_000));
        sets.push(convex_polygon(9));
    }
    let (mut equal, mut convex) = (0, 0);
    for ps in &sets {
        assert!(ps.len() <= max_n);
        let r = check_conjecture(ps.clone(), &limits).unwrap();
        assert!(r.conjecture_holds, "#T = {} > #PPT = {} on {:?}", r.num_triangulations, r.num_ppt, ps);
        assert_eq!(r.equality, r.convex_position, "{r:?} on {ps:?}");
        equal += r.equality as usize;
        convex += r.convex_position as usize;
    }
    let budget = if extended { Duration::MAX } else { Duration::from_secs(600) };
    format!(
        "{} sets up to n = {max_n}, {equal} equalities, {convex} convex, {}",
        sets.len(),
        within(start, budget, "conjecture")
    )
}

fn c4_known_counts() -> String {
    let limits = Limits::default();
    for n in 4..=7 {
        let r = check_conjecture(convex_polygon(n), &limits).unwrap();
        let c = catalan(n as u64 - 2);
        assert_eq!((r.num_triangulations, r.num_ppt), (c, c), "convex {n}-gon");
    }
    let r = check_conjecture(triangle_plus_interior(), &limits).unwrap();
    assert_eq!((r.num_triangulations, r.num_ppt), (1, 3));
    "convex 4..7-gons give 2, 5, 14, 42; triangle + interior gives (1, 3)".into()
}

fn c5_oracle() -> String {
    let limits = Limits::default();
    let sets = suite(7);
    for ps in &sets {
        let flips: BTreeSet<EdgeKey> = enumerate_ppt(ps.clone(), &limits).unwrap().iter().map(|t| t.key()).collect();
        let brute = brute_force_maximal_pointed(ps.clone(), &limits).unwrap();
        assert_eq!(flips, brute, "{ps:?}");
    }
    format!("{} sets with n <= 7", sets.len())
}

fn c6_degree() -> String {
    let limits = Limits::default();
    let sets = suite(8);
    let worst = sets
        .iter()
        .map(|ps| min_max_degree(ps.clone(), &limits).unwrap())
        .max()
        .unwrap();
    assert!(worst <= 5);
    format!("{} sets with n <= 8, largest min-max degree {worst}", sets.len())
}

fn c7_rigidity() -> String {
    let start = Instant::now();
    let limits = Limits::default();
    let (mut ppts, mut cuts) = (0, 0);
    for ps in suite(7) {
        let n = ps.len();
        for t in enumerate_ppt(ps.clone(), &limits).unwrap() {
            let m = rigidity_matrix(t.graph());
            assert_eq!(m.shape().0, 2 * n - 3);
            assert_eq!(rank(&m), 2 * n - 3);
            for e in hull_edges(&ps) {
                let cut = t.graph().remove_edge(e).unwrap();
                // pinned_flex fails unless the pinned nullspace is one-dimensional.
                pinned_flex(&cut).unwrap();
                let motion = mechanism_motion(&t, e).unwrap();
                assert!(motion.pair_rate(&cut, e.lo, e.hi).is_positive());
                let report = is_expansive(&cut, &motion);
                assert!(report.violations.is_empty(), "{:?}", report.violations);
                cuts += 1;
            }
            ppts += 1;
        }
    }
    format!("{ppts} PPTs, {cuts} hull cuts, {}", within(start, Duration::from_secs(300), "rigidity"))
}

fn c8_flips() -> String {
    let limits = Limits::default();
    let mut flips = 0;
    for ps in suite(7) {
        for t in enumerate_ppt(ps, &limits).unwrap() {
            for e in t.interior_edges() {
                let s = flip(&t, e).unwrap();
                let added: Vec<_> = s.graph().edges().difference(t.graph().edges()).copied().collect();
                assert_eq!(added.len(), 1);
                assert_eq!(flip(&s, added[0]).unwrap(), t);
                flips += 1;
            }
        }
    }
    format!("{flips} flips checked")
}

/// Runs a command line twice; returns stdout and exit code after checking both
/// runs agree byte for byte, including any files named in `outputs`.
fn run_twice(args: &[&str], outputs: &[&Path]) -> (Vec<u8>, i32) {
    let mut runs = Vec::new();
    for _ in 0..2 {
        for p in outputs {
            let _ = fs::remove_file(p);
            let _ = fs::remove_dir_all(p);
        }
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["pseudotri"];
        argv.extend_from_slice(args);
        let code = pseudotri_cli::run(argv, &mut out, &mut err);
        let files: Vec<Vec<u8>> = outputs
            .iter()
            .flat_map(|p| {
                if p.is_dir() {
                    let mut names: Vec<_> = fs::read_dir(p).unwrap().map(|e| e.unwrap().path()).collect();
                    names.sort();
                    names.into_iter().map(|f| fs::read(f).unwrap()).collect()
                } else {
                    vec![fs::read(p).unwrap()]
                }
            })
            .collect();
        runs.push((out, code, files));
    }
    assert_eq!(runs[0], runs[1], "{args:?} is not deterministic");
    let (out, code, _) = runs.swap_remove(0);
    (out, code)
}

fn c9_determinism() -> String {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let pts = d.join("pts.txt");
    fs::write(&pts, "# seven points\n0 0\n10 1\n4 8\n3 2\n6 3\n1 6\n8 7\n").unwrap();
    let p = pts.to_str().unwrap();
    let edges = d.join("ppt.txt");
    let e = edges.to_str().unwrap();
    let svg = d.join("out.svg");
    let listing = d.join("listing");

    let (_, code) = run_twice(&["construct", p, "--out", e], &[&edges]);
    assert_eq!(code, 0);
    let commands: Vec<(Vec<&str>, Vec<&Path>)> = vec![
        (vec!["validate", p, e], vec![]),
        (vec!["construct", p], vec![]),
        (vec!["count", p, "--json"], vec![]),
        (vec!["degree", p, "--json"], vec![]),
        (vec!["rigidity", p, e, "--remove-hull-edge", "0", "1", "--json"], vec![]),
        (vec!["render", p, e, "-o", svg.to_str().unwrap(), "--shade", "--labels"], vec![&svg]),
        (vec!["enumerate", p, "--kind", "ppt", "--out", listing.to_str().unwrap()], vec![&listing]),
        (vec!["enumerate", p, "--kind", "tri", "--json"], vec![]),
        (vec!["conjecture-sweep", "--n", "6", "--trials", "8", "--seed", "42", "--json"], vec![]),
    ];
    for (args, outputs) in &commands {
        let (_, code) = run_twice(args, outputs);
        assert_eq!(code, 0, "{args:?}");
    }
    format!("{} commands byte-identical across runs", commands.len() + 1)
}

type Criterion = (&'static str, fn() -> String);

fn main() {
    let criteria: [Criterion; 9] = [
        ("C1 face/edge regularity", c1_regularity),
        ("C2 pointed = minimum", c2_minimality),
        ("C3 #T <= #PPT, equality iff convex", c3_conjecture),
        ("C4 known counts", c4_known_counts),
        ("C5 flip graph = brute force", c5_oracle),
        ("C6 degree bound", c6_degree),
        ("C7 rigidity, 1-dof, expansive", c7_rigidity),
        ("C8 flips unique and involutive", c8_flips),
        ("C9 CLI determinism", c9_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, check) in criteria {
        match panic::catch_unwind(AssertUnwindSafe(check)) {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("[FAIL] {name}: {msg}");
            }
        }
    }
    let _ = panic::take_hook();
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
