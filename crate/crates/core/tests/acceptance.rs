//! End-to-end acceptance run: one pass/fail line per criterion.
//!
//! Reference values come from small exhaustive routines in this file, not
//! from the library's own kernels, so the checks stay independent of the
//! code under test.

use std::io::Write;
use std::time::Instant;

use minorfree::detectors::{chordality, find_induced_tk2, has_induced_minor, MinorOracleConfig};
use minorfree::error::ViolationKind;
use minorfree::friendship::{check_path_decomposition, f_bound, solve_friendship, verify_cut_selection};
use minorfree::generate::{generate, generate_with, Kind, Pattern};
use minorfree::graph::{Graph, VertexSet};
use minorfree::io::{parse, parse_graph, serialize, write_graph, Format};
use minorfree::kernels::{
    enumerate_maximal_independent_sets, maximum_matching, mis_bipartite, mis_chordal, mis_oracle,
};
use minorfree::report::{solve_instance, Algorithm, SolveOptions};
use minorfree::triangles::{branch_short_holes, solve_triangles_c4, OracleFallback};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn line(ok: bool, id: usize, text: String) {
    let mark = if ok { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "acceptance {id:>2} [{mark}] {text}");
    let _ = out.flush();
}

fn masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

/// Independence number by plain branching on vertex bitmasks.
fn alpha(adj: &[u64], s: u64) -> u32 {
    if s == 0 {
        return 0;
    }
    let v = s.trailing_zeros() as usize;
    let deg = (adj[v] & s).count_ones();
    if deg <= 1 {
        return 1 + alpha(adj, s & !(1 << v) & !adj[v]);
    }
    let mut best = v;
    let mut d = deg;
    let mut rest = s;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let du = (adj[u] & s).count_ones();
        if du > d {
            best = u;
            d = du;
        }
    }
    let drop = alpha(adj, s & !(1 << best));
    let take = 1 + alpha(adj, s & !(1 << best) & !adj[best]);
    drop.max(take)
}

fn reference_alpha(g: &Graph) -> usize {
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    alpha(&masks(g), all) as usize
}

/// Number of maximal independent sets, by checking every subset.
fn count_maximal(g: &Graph) -> u64 {
    let adj = masks(g);
    let mut count = 0;
    'subsets: for s in 0u64..1 << g.n() {
        for (v, &nb) in adj.iter().enumerate() {
            let inside = s >> v & 1 == 1;
            // members need no neighbor inside, outsiders at least one
            if inside == (nb & s != 0) {
                continue 'subsets;
            }
        }
        count += 1;
    }
    count
}

fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    generate_with(&Kind::RandomGnp { n, p }, rng).unwrap().graph
}

fn relabel(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = g.vertices().collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}

/// Rejection sampling: draws from `propose` until the induced-minor oracle
/// finds no copy of `h`.
fn sample_in_class(
    h: &Graph,
    cfg: &MinorOracleConfig,
    rng: &mut ChaCha8Rng,
    mut propose: impl FnMut(&mut ChaCha8Rng) -> Graph,
) -> Graph {
    loop {
        let g = propose(rng);
        if has_induced_minor(&g, h, cfg).unwrap().is_none() {
            return g;
        }
    }
}

/// `G(n, p)` with a fresh edge probability per draw, so both sparse and
/// dense members of a class show up.
fn any_density(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let p = rng.gen_range(0.05..0.95);
    gnp(n, p, rng)
}

/// A cycle on most of the `n` vertices plus a few random extra edges.
fn near_cycle(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let k = rng.gen_range(n.min(6)..=n);
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    for _ in 0..rng.gen_range(0..=3) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            edges.push((u, v));
        }
    }
    relabel(&Graph::from_edges(n, &edges).unwrap(), rng)
}

/// A random chordal graph with up to two extra edges.
fn near_chordal(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let g = generate_with(
        &Kind::Chordal {
            n,
            p: rng.gen_range(0.2..0.8),
        },
        rng,
    )
    .unwrap()
    .graph;
    let mut edges: Vec<_> = g.edges().collect();
    for _ in 0..rng.gen_range(0..=2) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            edges.push((u, v));
        }
    }
    relabel(&Graph::from_edges(n, &edges).unwrap(), rng)
}

/// A random tree with ears: each extra vertex joins both ends of an existing
/// edge, which keeps the graph chordal and spreads triangles along the tree.
/// Sometimes one random edge is added on top.
fn ear_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let backbone = rng.gen_range(n / 2..=n - 3);
    let mut edges: Vec<(usize, usize)> = (1..backbone).map(|v| (rng.gen_range(0..v), v)).collect();
    for w in backbone..n {
        if edges.is_empty() {
            edges.push((0, w));
            continue;
        }
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        edges.extend([(u, w), (v, w)]);
    }
    if rng.gen_bool(0.3) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            edges.push((u, v));
        }
    }
    relabel(&Graph::from_edges(n, &edges).unwrap(), rng)
}

/// Three disjoint triangles plus connector vertices. A connector joins a
/// clique of one component, or one clique in each of two components, so no
/// hole appears (up to one random extra edge at the end).
fn linked_triangles(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..3)
        .flat_map(|k| [(3 * k, 3 * k + 1), (3 * k + 1, 3 * k + 2), (3 * k, 3 * k + 2)])
        .collect();
    for w in 9..n {
        let g = Graph::from_edges(w, &edges).unwrap();
        let comps = minorfree::graph::connected_components(&g);
        let picks = if comps.len() > 1 && rng.gen_bool(0.7) {
            2
        } else {
            1
        };
        let chosen: Vec<&VertexSet> = comps.choose_multiple(rng, picks).collect();
        for comp in chosen {
            let members: Vec<usize> = comp.iter().copied().collect();
            let u = *members.choose(rng).unwrap();
            edges.push((u, w));
            if let Some(&x) = g.neighbors(u).choose(rng) {
                if rng.gen_bool(0.5) {
                    edges.push((x, w));
                }
            }
        }
    }
    if rng.gen_bool(0.3) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            edges.push((u, v));
        }
    }
    relabel(&Graph::from_edges(n, &edges).unwrap(), rng)
}

#[derive(Default)]
struct FriendshipRuns {
    instances: usize,
    agree: usize,
    decompositions: usize,
    multi_bag: usize,
    decomposition_errors: Vec<String>,
    max_cut: usize,
    cut_violations: usize,
    edges_checked: usize,
    counterexamples: usize,
}

impl FriendshipRuns {
    fn record(&mut self, g: &Graph, t: usize, expected: usize) {
        let sol = solve_friendship(g, t);
        self.instances += 1;
        if g.is_independent(&sol.independent_set) && sol.independent_set.len() == expected {
            self.agree += 1;
        }
        for comp in &sol.components {
            for piece in &comp.pieces {
                self.decompositions += 1;
                if piece.decomposition.len() > 1 {
                    self.multi_bag += 1;
                }
                if piece.single_bag_fallback {
                    self.decomposition_errors
                        .push("decomposition fell back to one bag".into());
                }
                self.decomposition_errors.extend(check_path_decomposition(
                    &piece.graph,
                    &piece.decomposition,
                    t,
                ));
                for cut in &piece.decomposition.cutsets {
                    self.max_cut = self.max_cut.max(cut.len());
                }
            }
            if let Some(sel) = &comp.selection {
                let report = verify_cut_selection(&comp.graph, sel);
                self.edges_checked += report.edges_checked;
                self.counterexamples += report.counterexamples.len();
            }
        }
        self.cut_violations += sol
            .violations
            .iter()
            .filter(|v| {
                matches!(
                    v.kind,
                    ViolationKind::CutsetTooLarge
                        | ViolationKind::PathNeighborhood
                        | ViolationKind::NoCutEdge
                )
            })
            .count();
    }
}

fn criterion_1(rng: &mut ChaCha8Rng) -> (bool, FriendshipRuns) {
    let start = Instant::now();
    let mut runs = FriendshipRuns::default();
    let forest_cfg = MinorOracleConfig {
        max_host: 20,
        ..MinorOracleConfig::default()
    };
    let k3 = Pattern::Friendship.graph(1);
    let mut verified = 0;
    for i in 0..150 {
        let n = rng.gen_range(1..=20);
        let mut g = generate_with(&Kind::Tree { n }, rng).unwrap().graph;
        if i % 2 == 1 {
            // forest: drop a few tree edges
            let keep: Vec<_> = g.edges().filter(|_| rng.gen_bool(0.8)).collect();
            g = Graph::from_edges(n, &keep).unwrap();
        }
        if has_induced_minor(&g, &k3, &forest_cfg).unwrap().is_none() {
            verified += 1;
        }
        runs.record(&g, 1, reference_alpha(&g));
    }
    let h = Pattern::Friendship.graph(2);
    let cfg = MinorOracleConfig::default();
    for i in 0..150 {
        let n = rng.gen_range(4..=14);
        let g = if i % 2 == 0 {
            sample_in_class(&h, &cfg, rng, |r| any_density(n, r))
        } else {
            sample_in_class(&h, &cfg, rng, |r| near_cycle(n, r))
        };
        verified += 1;
        let expected = reference_alpha(&g);
        assert_eq!(mis_oracle(&g).unwrap().len(), expected);
        runs.record(&g, 2, expected);
    }
    let ok = runs.instances == 300 && verified == 300 && runs.agree == 300;
    line(
        ok,
        1,
        format!(
            "friendship solver vs exact MIS: {}/{} agree ({} verified in class, {:.1}s)",
            runs.agree,
            runs.instances,
            verified,
            start.elapsed().as_secs_f64()
        ),
    );
    (ok, runs)
}

#[derive(Default)]
struct TriangleRuns {
    instances: usize,
    agree: usize,
    separator_leaves: usize,
    clique_checks: usize,
    chordality_checks: usize,
    firings: usize,
}

impl TriangleRuns {
    fn record(&mut self, g: &Graph) {
        let sol = solve_triangles_c4(g, 1, &OracleFallback::default()).unwrap();
        self.instances += 1;
        if g.is_independent(&sol.independent_set) && sol.independent_set.len() == reference_alpha(g) {
            self.agree += 1;
        }
        self.separator_leaves += sol.leaves.separator;
        self.clique_checks += sol.leaves.clique_checks;
        self.chordality_checks += sol.leaves.chordality_checks;
        self.firings += sol
            .violations
            .iter()
            .filter(|v| {
                matches!(
                    v.kind,
                    ViolationKind::SeparatorNotClique
                        | ViolationKind::CommonNeighborhoodNotClique
                        | ViolationKind::RemainderNotChordal
                )
            })
            .count();
    }
}

fn criterion_2(rng: &mut ChaCha8Rng) -> (bool, TriangleRuns) {
    let start = Instant::now();
    let h = Pattern::TrianglesC4.graph(1);
    let cfg = MinorOracleConfig::default();
    let mut runs = TriangleRuns::default();
    for i in 0..300 {
        let n = rng.gen_range(3..=14);
        let g = match i % 3 {
            0 => sample_in_class(&h, &cfg, rng, |r| any_density(n, r)),
            1 => sample_in_class(&h, &cfg, rng, |r| near_chordal(n, r)),
            _ if i % 2 == 0 => sample_in_class(&h, &cfg, rng, |r| ear_tree(n.max(9), r)),
            _ => sample_in_class(&h, &cfg, rng, |r| linked_triangles(n.max(9), r)),
        };
        runs.record(&g);
    }
    let in_class = runs.agree;
    for i in 0..100 {
        let g = relabel(&minorfree::graph::families::cycle(7 + i % 24), rng);
        runs.record(&g);
    }
    let ok = runs.instances == 400 && runs.agree == 400;
    line(
        ok,
        2,
        format!(
            "triangles-C4 solver vs exact MIS: {}/300 in-class, {}/100 long cycles ({:.1}s)",
            in_class,
            runs.agree - in_class,
            start.elapsed().as_secs_f64()
        ),
    );
    (ok, runs)
}

fn criterion_3(rng: &mut ChaCha8Rng) -> bool {
    let mut agree = 0;
    let mut branched = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=13);
        let g = gnp(n, rng.gen_range(0.1..0.9), rng);
        let out = branch_short_holes(&g, 1, 6, mis_oracle).unwrap();
        if out.stats.nodes > 0 {
            branched += 1;
        }
        if g.is_independent(&out.independent_set) && out.independent_set.len() == reference_alpha(&g) {
            agree += 1;
        }
    }
    let ok = agree == 200;
    line(
        ok,
        3,
        format!("branching with exact leaves: {agree}/200 exact ({branched} branched)"),
    );
    ok
}

fn criterion_4(rng: &mut ChaCha8Rng) -> bool {
    let mut within = 0;
    let mut counted = 0;
    let mut worst: f64 = 0.0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=14);
        let g = loop {
            let g = gnp(n, rng.gen_range(0.05..0.95), rng);
            if find_induced_tk2(&g, 2).is_none() {
                break g;
            }
        };
        let count = count_maximal(&g);
        let listed = enumerate_maximal_independent_sets(&g, usize::MAX).unwrap().len() as u64;
        if listed == count {
            counted += 1;
        }
        let bound = (n as u64).pow(3);
        if count <= bound {
            within += 1;
        }
        worst = worst.max(count as f64 / bound as f64);
    }
    let ok = within == 500 && counted == 500;
    line(
        ok,
        4,
        format!("maximal independent sets of 2K2-free graphs <= n^3: {within}/500 (enumerator exact {counted}/500, worst ratio {worst:.3})"),
    );
    ok
}

fn criterion_5(rng: &mut ChaCha8Rng) -> bool {
    let mut konig = 0;
    let mut small = 0;
    let mut small_ok = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=60);
        let left = rng.gen_range(0..=n);
        let p = rng.gen_range(0.02..0.5);
        let g = generate_with(
            &Kind::RandomBipartite {
                left,
                right: n - left,
                p,
            },
            rng,
        )
        .unwrap()
        .graph;
        let mis = mis_bipartite(&g).unwrap();
        let matching = maximum_matching(&g).unwrap();
        let used: VertexSet = matching.iter().flat_map(|&(a, b)| [a, b]).collect();
        let valid = used.len() == 2 * matching.len() && matching.iter().all(|&(a, b)| g.has_edge(a, b));
        if valid && g.is_independent(&mis) && mis.len() + matching.len() == n {
            konig += 1;
        }
        if n <= 24 {
            small += 1;
            if mis.len() == reference_alpha(&g) {
                small_ok += 1;
            }
        }
    }
    let ok = konig == 500 && small_ok == small;
    line(
        ok,
        5,
        format!("König: {konig}/500 with MIS + matching = n, exact on {small_ok}/{small} with n <= 24"),
    );
    ok
}

fn criterion_6(rng: &mut ChaCha8Rng) -> bool {
    let mut independent = 0;
    let mut small = 0;
    let mut small_ok = 0;
    let mut chordal = 0;
    for _ in 0..300 {
        let n = rng.gen_range(1..=60);
        let g = generate_with(
            &Kind::Chordal {
                n,
                p: rng.gen_range(0.1..0.9),
            },
            rng,
        )
        .unwrap()
        .graph;
        if chordality(&g).order().is_some() {
            chordal += 1;
        }
        let mis = mis_chordal(&g).unwrap();
        if g.is_independent(&mis) {
            independent += 1;
        }
        if n <= 24 {
            small += 1;
            if mis.len() == reference_alpha(&g) {
                small_ok += 1;
            }
        }
    }
    let ok = independent == 300 && small_ok == small && chordal == 300;
    line(
        ok,
        6,
        format!("chordal kernel: {independent}/300 independent, exact on {small_ok}/{small} with n <= 24"),
    );
    ok
}

fn criterion_7(runs: &FriendshipRuns, rng: &mut ChaCha8Rng) -> bool {
    // Criterion 1's small instances never reach f(2) layers, so long cycles
    // (in class for every t >= 2) are added to exercise real cuts.
    let mut long = FriendshipRuns::default();
    for _ in 0..10 {
        let n = rng.gen_range(250..=400);
        let g = relabel(&minorfree::graph::families::cycle(n), rng);
        long.record(&g, 2, n / 2);
    }
    let t2 = 4;
    let clean =
        |r: &FriendshipRuns| r.decomposition_errors.is_empty() && r.cut_violations == 0 && r.max_cut <= t2;
    let ok = clean(runs) && clean(&long) && long.agree == long.instances && long.multi_bag > 0;
    line(
        ok,
        7,
        format!(
            "decomposition certificates: {} decompositions from criterion 1 and {} from {} long cycles \
             ({} multi-bag, largest cut {} <= t^2, window bound 2f = {}), {} errors, {} cut assertions fired",
            runs.decompositions,
            long.decompositions,
            long.instances,
            runs.multi_bag + long.multi_bag,
            runs.max_cut.max(long.max_cut),
            2 * f_bound(2),
            runs.decomposition_errors.len() + long.decomposition_errors.len(),
            runs.cut_violations + long.cut_violations
        ),
    );
    if !ok {
        for e in runs
            .decomposition_errors
            .iter()
            .chain(&long.decomposition_errors)
            .take(5)
        {
            line(false, 7, format!("  {e}"));
        }
    }
    ok
}

fn criterion_8(runs: &TriangleRuns) -> bool {
    let ok = runs.firings == 0;
    line(
        ok,
        8,
        format!(
            "separator structure: {} firings over {} clique and {} chordality checks ({} separator leaves)",
            runs.firings, runs.clique_checks, runs.chordality_checks, runs.separator_leaves
        ),
    );
    ok
}

fn criterion_9(runs: &FriendshipRuns) -> bool {
    let ok = runs.counterexamples == 0;
    line(
        ok,
        9,
        format!(
            "cut selection consequences: {} counterexamples over {} checked edges",
            runs.counterexamples, runs.edges_checked
        ),
    );
    ok
}

fn criterion_10(rng: &mut ChaCha8Rng) -> bool {
    let dir = std::env::temp_dir().join(format!("minorfree-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut round_trips = 0;
    for i in 0..100 {
        let n = rng.gen_range(0..=40);
        let g = gnp(n, rng.gen_range(0.0..0.5), rng);
        let mut ok = true;
        for format in [Format::Dimacs, Format::Edgelist] {
            let text = serialize(&g, format);
            let back = parse(&text, format).unwrap();
            let path = dir.join(format!("g{i}.{format:?}"));
            write_graph(&path, &g, format).unwrap();
            let from_file = parse_graph(&path, format).unwrap();
            ok &= back == g && from_file == g && serialize(&back, format) == text;
            ok &= std::fs::read_to_string(&path).unwrap() == text;
        }
        if ok {
            round_trips += 1;
        }
    }
    std::fs::remove_dir_all(&dir).unwrap();

    let mut identical = 0;
    let mut runs = 0;
    let algorithms = [
        (Algorithm::Friendship, Kind::Tree { n: 15 }),
        (Algorithm::TrianglesC4, Kind::RandomGnp { n: 12, p: 0.3 }),
        (Algorithm::Oracle, Kind::RandomGnp { n: 18, p: 0.3 }),
        (Algorithm::Chordal, Kind::Chordal { n: 30, p: 0.5 }),
        (
            Algorithm::Bipartite,
            Kind::RandomBipartite {
                left: 10,
                right: 14,
                p: 0.2,
            },
        ),
    ];
    for seed in 0..20 {
        for (algorithm, kind) in &algorithms {
            let opts = SolveOptions {
                algorithm: *algorithm,
                t: 1,
                verify: true,
                ..SolveOptions::default()
            };
            let report = |s| {
                let g = generate(kind, s).unwrap().graph;
                solve_instance("x", &g, &opts).unwrap().without_timing()
            };
            let (a, b) = (report(seed), report(seed));
            runs += 1;
            if a == b && serde_json::to_string(&a).unwrap() == serde_json::to_string(&b).unwrap() {
                identical += 1;
            }
        }
    }
    let ok = round_trips == 100 && identical == runs;
    line(
        ok,
        10,
        format!("round trips {round_trips}/100 in both formats, identical reports {identical}/{runs} under fixed seeds"),
    );
    ok
}

#[test]
fn acceptance() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let (ok1, friendship_runs) = criterion_1(&mut rng);
    let (ok2, triangle_runs) = criterion_2(&mut rng);
    let results = [
        ok1,
        ok2,
        criterion_3(&mut rng),
        criterion_4(&mut rng),
        criterion_5(&mut rng),
        criterion_6(&mut rng),
        criterion_7(&friendship_runs, &mut rng),
        criterion_8(&triangle_runs),
        criterion_9(&friendship_runs),
        criterion_10(&mut rng),
    ];
    let failed: Vec<usize> = (1..=10).filter(|&i| !results[i - 1]).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
