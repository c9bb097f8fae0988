//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits non-zero if
//! any fails. Run a subset with e.g. `cargo test --release --test acceptance -- 3 8`.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use artin_markings::marking_graph::StandardMarking;
use artin_markings::parabolic::permute_set;
use artin_markings::{
    ArtinElement, ArtinGroup, AscendingProduct, CparabSimplex, GenSet, GeneratorWord, Marking, MoveKind,
    ParabolicSubgroup,
};
use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

const KERNEL_LIMIT: Duration = Duration::from_secs(120);
const CONJ_LIMIT: Duration = Duration::from_secs(30);
const PROBE_LIMIT: Duration = Duration::from_secs(300);

fn group(s: &str) -> ArtinGroup {
    ArtinGroup::from_type_str(s).unwrap()
}

fn set(ix: &[usize]) -> GenSet {
    GenSet::from_indices(ix.iter().map(|i| i - 1))
}

fn word(g: &ArtinGroup, w: &str) -> ArtinElement {
    g.normalize(&GeneratorWord::parse(w, g.rank()).unwrap())
}

fn random_element(g: &ArtinGroup, rng: &mut StdRng, len: usize) -> ArtinElement {
    g.normalize(&from_signed(&random_signed_word(rng, g.rank(), len)))
}

fn signed(g: &ArtinGroup, x: &ArtinElement) -> Vec<i32> {
    to_signed(&g.to_word(x))
}

/// Normal form against subword reversing: same element, and trivial exactly when the
/// oracle says so.
fn kernel_agrees(g: &ArtinGroup, m: &[Vec<u32>], w: &[i32]) -> bool {
    let x = g.normalize(&from_signed(w));
    reversing_equal(m, w, &signed(g, &x)) && x.is_identity() == reversing_is_trivial(m, w)
}

fn c1_garside_kernel() -> Check {
    let start = Instant::now();
    let mut checked = 0usize;
    for ty in ["A2", "B2"] {
        let g = group(ty);
        let m = labels(&g);
        for len in 0..=8 {
            for w in all_signed_words(2, len) {
                ensure!(kernel_agrees(&g, &m, &w), "{ty}: {w:?}");
                checked += 1;
            }
            // positive words: classes under braid rewriting = fibres of normalize
            for class in positive_classes(&m, len) {
                let nf: BTreeSet<ArtinElement> = class.iter().map(|w| g.normalize(&from_signed(w))).collect();
                ensure!(nf.len() == 1, "{ty}: class of {:?} splits", class[0]);
            }
            let distinct: BTreeSet<ArtinElement> =
                all_positive(2, len).iter().map(|w| g.normalize(&from_signed(w))).collect();
            ensure!(distinct.len() == positive_classes(&m, len).len(), "{ty}: classes merge at length {len}");
        }
    }
    let mut rng = StdRng::seed_from_u64(1);
    for ty in ["A3", "B3", "I2(5)", "I2(6)", "I2(7)", "I2(8)"] {
        let g = group(ty);
        let m = labels(&g);
        for _ in 0..5000 {
            let w = random_signed_word(&mut rng, g.rank(), 6);
            ensure!(kernel_agrees(&g, &m, &w), "{ty}: {w:?}");
            checked += 1;
        }
    }
    let t = start.elapsed();
    ensure!(t < KERNEL_LIMIT, "took {t:?}");
    Ok(format!("{checked} words, 0 disagreements"))
}

fn all_positive(rank: usize, len: usize) -> Vec<Vec<i32>> {
    all_signed_words(rank, len).into_iter().filter(|w| w.iter().all(|&x| x > 0)).collect()
}

fn c2_worked_examples() -> Check {
    let g = group("I2(4)");
    let x = word(&g, "s1 s2 s1 s2^2");
    let a = g.mul(&g.inv(&word(&g, "s2 s1 s2")), &x);
    let b = g.mul(&g.inv(&word(&g, "s1 s2 s1")), &x);
    ensure!(g.format_element(&a) == "DELTA^0 | s1 s2", "got {}", g.format_element(&a));
    ensure!(g.format_element(&b) == "DELTA^0 | s2.s2", "got {}", g.format_element(&b));
    ensure!(g.atom_length(&x).unwrap() == 5, "length");
    ensure!(g.support(&x).unwrap() == g.all(), "support");

    let mut tables = 0;
    let mut check_table = |g: &ArtinGroup, want: Vec<usize>| -> Result<(), String> {
        let p = g.delta_permutation(g.all()).map_err(|e| e.to_string())?;
        ensure!(p == want, "{:?}: {p:?}", g.ty());
        let d = g.delta_pow(1);
        for (i, &j) in want.iter().enumerate() {
            ensure!(g.conjugate(&g.gen(i), &d) == g.gen(j), "{:?}: s{} by normal form", g.ty(), i + 1);
        }
        tables += 1;
        Ok(())
    };
    for n in 2..=7 {
        check_table(&group(&format!("A{n}")), (0..n).rev().collect())?;
    }
    for n in [5, 7] {
        let mut want: Vec<usize> = (0..n).collect();
        want.swap(n - 2, n - 1);
        check_table(&group(&format!("D{n}")), want)?;
    }
    check_table(&group("E6"), vec![5, 4, 2, 3, 1, 0])?;
    for m in [3, 5, 7, 9] {
        check_table(&group(&format!("I2({m})")), vec![1, 0])?;
    }
    Ok(format!("I2(4) prefixes, support/length and {tables} Δ-conjugation tables"))
}

fn c3_e8_conjugacy() -> Check {
    let start = Instant::now();
    let e8 = group("E8");
    let cg = e8.build_conjugacy_graph();
    let (x, x2) = (set(&[1, 2, 3, 4]), set(&[5, 6, 7, 8]));
    ensure!(cg.standard_conjugate(x, x2), "not conjugate");
    let routes = [
        (set(&[1, 2, 3, 4, 5, 6]), set(&[3, 4, 5, 6]), set(&[3, 4, 5, 6, 7, 8])),
        (set(&[1, 2, 3, 4, 5]), set(&[1, 2, 3, 5]), set(&[1, 2, 3, 5, 6, 7, 8])),
    ];
    for (first, mid, second) in routes {
        ensure!(permute_set(&e8.delta_permutation(first).unwrap(), x) == mid, "first step");
        ensure!(permute_set(&e8.delta_permutation(second).unwrap(), mid) == x2, "second step");
        ensure!(cg.path_within(x, mid, first).is_some(), "no edge path inside {first}");
        ensure!(cg.path_within(mid, x2, second).is_some(), "no edge path inside {second}");
    }
    let mut negatives = 0;
    for a in 0..256u64 {
        for b in 0..256u64 {
            if GenSet(a).len() != GenSet(b).len() {
                ensure!(!cg.standard_conjugate(GenSet(a), GenSet(b)), "{} ~ {}", GenSet(a), GenSet(b));
                negatives += 1;
            }
        }
    }
    let t = start.elapsed();
    ensure!(t < CONJ_LIMIT, "took {t:?}");
    Ok(format!("both witness paths present, {negatives} size-mismatch queries false"))
}

fn c4_maximal_simplices() -> Check {
    let a3 = group("A3");
    let found: BTreeSet<Vec<GenSet>> = a3
        .enumerate_maximal_standard()
        .into_iter()
        .map(|mut v| {
            v.sort();
            v
        })
        .collect();
    let brute = brute_force_maximal(&a3);
    ensure!(found == brute, "enumeration {found:?} vs brute force {brute:?}");
    ensure!(found.len() == 5, "{} simplices", found.len());

    let e6 = group("E6");
    let pi = CparabSimplex::standard(&e6, &[set(&[1]), set(&[1, 2]), set(&[4]), set(&[5, 6]), set(&[6])]);
    ensure!(e6.is_maximal_standard(&pi).unwrap().is_some(), "Π not maximal");
    let lv = e6.decompose_levels(&pi).unwrap();
    ensure!(lv.levels == vec![vec![1, 2, 3], vec![0, 4]], "Π levels {:?}", lv.levels);

    for n in 3..=8 {
        let b = group(&format!("B{n}"));
        let chain: Vec<GenSet> = (1..n).map(|k| GenSet::from_indices(0..k)).collect();
        let s = CparabSimplex::standard(&b, &chain);
        ensure!(b.is_maximal_standard(&s).unwrap().is_some(), "B{n} chain not maximal");
        let lv = b.decompose_levels(&s).unwrap();
        for k in 1..n {
            // level k is {s1, ..., s_{n-k}}
            ensure!(lv.levels[k - 1] == vec![n - 1 - k], "B{n} level {k}");
        }
    }
    Ok("A3: 5 = brute force; E6 Π and B3..B8 chains maximal with expected levels".into())
}

fn c5_ascending_round_trips() -> Check {
    let mut rng = StdRng::seed_from_u64(5);
    let types = ["A2", "B2", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "A3", "B3", "H3"];
    for ty in types {
        let g = group(ty);
        let families = g.enumerate_maximal_standard();
        for trial in 0..200 {
            let xs = &families[rng.gen_range(0..families.len())];
            let x = random_element(&g, &mut rng, 4);
            let simplex = g.conj_simplex(&CparabSimplex::standard(&g, xs), &x);
            let st = g.canonical_positive_standardizer(&simplex).map_err(|e| format!("{ty}: {e}"))?;
            let exps: Vec<i64> = (0..xs.len()).map(|_| rng.gen_range(-2..=2)).collect();
            let p = AscendingProduct::over(&st, &exps, rng.gen_range(-2..=2));
            let h = g.mul(&st.g, &g.ascending_element(&p));
            let back = g.extract_ascending_product(&h, &st).map_err(|e| format!("{ty} #{trial}: {e}"))?;
            let same = back.gamma == p.gamma && st.subsets.iter().all(|&s| back.exponent_of(s) == p.exponent_of(s));
            ensure!(same, "{ty} #{trial}: {p:?} came back as {back:?}");
        }
    }
    Ok(format!("200 round trips for each of {} types", types.len()))
}

fn c6_ribbons() -> Check {
    let mut rng = StdRng::seed_from_u64(6);
    let mut total = 0;
    for ty in ["A3", "B3"] {
        let g = group(ty);
        let m = labels(&g);
        for t in 0..g.rank() {
            let x = g.all().without(t);
            let mut done = 0;
            let mut attempts = 0;
            while done < 100 {
                attempts += 1;
                ensure!(attempts < 100_000, "{ty}: too few closed walks from {x}");
                let mut ts = Vec::new();
                let mut cur = x;
                for _ in 0..rng.gen_range(1..=6) {
                    let s = rng.gen_range(0..g.rank());
                    ts.push(s);
                    cur = g.elementary_ribbon(cur, s).target;
                }
                if cur != x {
                    continue;
                }
                let f = g.ribbon_delta_form(x, &ts).map_err(|e| format!("{ty} {ts:?}: {e}"))?;
                let (composed, _) = g.compose_ribbons(x, &ts);
                let form = g.ribbon_form_element(&f);
                ensure!(form == composed, "{ty} {x} {ts:?}: normal forms differ");
                ensure!(reversing_equal(&m, &signed(&g, &form), &signed(&g, &composed)), "{ty} {ts:?}: oracle");
                done += 1;
            }
            total += done;
        }
    }
    let a3 = group("A3");
    let (x, y) = (set(&[1, 2]), set(&[2, 3]));
    let d = a3.delta_pow(1);
    let lhs = a3.product([&d, &a3.inv(&a3.garside_delta(y)), &d, &a3.inv(&a3.garside_delta(x))]);
    let rhs = a3.mul(&a3.delta_pow(2), &a3.delta_x_pow(x, -2));
    ensure!(lhs == rhs, "Case-2 identity (normal form)");
    ensure!(reversing_equal(&labels(&a3), &signed(&a3, &lhs), &signed(&a3, &rhs)), "Case-2 identity (oracle)");
    Ok(format!("{total} closed ribbon compositions plus the Case-2 identity"))
}

/// Maximal transversals contain the other maximal bases; below P_k both P_j and Q_j
/// sit inside P_k, and P_j is inside Q_k or commutes with it.
fn inclusion_lemmas(g: &ArtinGroup, m: &Marking) -> bool {
    let n = m.len();
    let inside = |a: &ParabolicSubgroup, b: &ParabolicSubgroup| g.parabolic_contains(a, b);
    let maximal: Vec<usize> =
        (0..n).filter(|&i| !(0..n).any(|k| k != i && inside(&m.pairs[k].0, &m.pairs[i].0))).collect();
    let top = maximal.iter().all(|&i| maximal.iter().all(|&k| i == k || inside(&m.pairs[i].1, &m.pairs[k].0)));
    let lower = (0..n).all(|j| {
        (0..n).all(|k| {
            if j == k || !inside(&m.pairs[k].0, &m.pairs[j].0) {
                return true;
            }
            let (pj, qj, qk) = (&m.pairs[j].0, &m.pairs[j].1, &m.pairs[k].1);
            inside(&m.pairs[k].0, qj) && (inside(qk, pj) || g.commutes(&g.z_of(pj).unwrap(), &g.z_of(qk).unwrap()))
        })
    });
    top && lower
}

fn c7_markings() -> Check {
    let types = ["A2", "A3", "A4", "B3", "D4", "I2(5)", "I2(6)", "I2(7)", "I2(8)"];
    let mut count = 0;
    for ty in types {
        let g = group(ty);
        for xs in g.enumerate_maximal_standard() {
            let m = g.standard_transversals(&xs).map_err(|e| format!("{ty}: {e}"))?;
            let cert = g.validate_marking(&m).map_err(|e| format!("{ty} {xs:?}: {e}"))?;
            ensure!(cert.transversals.iter().all(|t| t.k == 0), "{ty}: nonzero exponent");
            ensure!(g.projections(&m).unwrap().iter().all(|&k| k == 0), "{ty}: nonzero projection");
            ensure!(inclusion_lemmas(&g, &m), "{ty} {xs:?}: inclusion lemmas");
            count += 1;
        }
    }
    Ok(format!("{count} standard-transversal markings validate with zero projections"))
}

fn c8_moves() -> Check {
    let mut rng = StdRng::seed_from_u64(8);
    let types = ["A2", "A3", "B3", "I2(5)"];
    let mut paths = 0;
    for ty in types {
        let g = group(ty);
        let d = g.rank() - 1;
        let ms: Vec<Marking> = g.all_standard_markings().unwrap().iter().map(|s| g.standard_marking(s)).collect();
        for m in &ms {
            let nbrs = g.neighbors(m).map_err(|e| e.to_string())?;
            let twists = nbrs.iter().filter(|(_, k)| *k == MoveKind::Twist).count();
            ensure!(twists <= 2 * d, "{ty}: twist degree {twists}");
            for j in 0..m.len() {
                let flips = g.enumerate_flip_moves(m, j).map_err(|e| e.to_string())?;
                ensure!(!flips.is_empty(), "{ty}: no flip across {j}");
                let q = g.transversals_with_projection(m, j, 1).unwrap().remove(0);
                let m2 = m.with_transverse(j, q);
                let path = g.transversal_swap_path(m, &m2).map_err(|e| format!("{ty}: {e}"))?;
                ensure!(path.len() <= 5, "{ty}: swap path of {} moves", path.len() - 1);
                for w in path.windows(2) {
                    g.validate_marking(&w[1]).map_err(|e| format!("{ty}: path marking {e}"))?;
                    ensure!(g.move_kind(&w[0], &w[1]).unwrap().is_some(), "{ty}: path step is not a move");
                }
                paths += 1;
            }
        }
        for trial in 0..500 {
            let m = g.conj_marking(&ms[rng.gen_range(0..ms.len())], &random_element(&g, &mut rng, 3));
            let j = rng.gen_range(0..m.len());
            let other = if rng.gen_bool(0.5) {
                g.twist_move(&m, j, rng.gen_bool(0.5)).unwrap()
            } else {
                let flips = g.enumerate_flip_moves(&m, j).unwrap();
                flips[rng.gen_range(0..flips.len())].clone()
            };
            let x = random_element(&g, &mut rng, 4);
            let ok = g.verify_action_isometry(&m, &other, &x).map_err(|e| format!("{ty} #{trial}: {e}"))?;
            ensure!(ok, "{ty} #{trial}: conjugated edge changed kind");
        }
    }
    Ok(format!("{paths} swap paths of at most 4 moves, 500 equivariance trials for each of {} types", types.len()))
}

fn c9_stabilizer() -> Check {
    let start = Instant::now();
    let g = group("A2");
    let m = g.standard_transversals(&[set(&[1])]).unwrap();
    let hits = g.marking_stabilizer_probe(&m, 4);
    let got: BTreeSet<i64> = hits.iter().map(|h| h.inf()).collect();
    ensure!(hits.iter().all(|h| h.body().is_empty()), "non-Δ-power stabilizer found");
    ensure!(got == BTreeSet::from([-4, -2, 0, 2, 4]), "Δ exponents {got:?}");
    // independent pass over every signed word of length ≤ 4
    for len in 0..=4 {
        for w in all_signed_words(2, len) {
            let x = g.normalize(&from_signed(&w));
            ensure!(g.stabilizes_marking(&x, &m) == x.is_identity(), "{w:?}");
        }
    }
    let t = start.elapsed();
    ensure!(t < PROBE_LIMIT, "took {t:?}");
    Ok(format!("{} hits, all in ⟨Δ²⟩", hits.len()))
}

fn c10_connectivity() -> Check {
    let mut summary = Vec::new();
    for ty in ["A2", "A3", "I2(5)", "I2(6)", "I2(7)", "I2(8)"] {
        let g = group(ty);
        let r = g.standard_marking_connectivity().map_err(|e| e.to_string())?;
        ensure!(r.connected, "{ty}: disconnected");
        let dia = r.diameter.unwrap() as u64;
        ensure!(dia <= r.bound, "{ty}: diameter {dia} > {}", r.bound);
        summary.push(format!("{ty} {dia}≤{}", r.bound));
    }
    let g = group("A2");
    let standard: Vec<StandardMarking> = g.all_standard_markings().unwrap();
    let explored = g.bfs(&g.standard_marking(&standard[0]), 2).map_err(|e| e.to_string())?;
    for m in explored.nodes.values() {
        let (_, s) = g.standardize_marking(m).map_err(|e| e.to_string())?;
        let sm = g.as_standard_marking(&s);
        ensure!(sm.is_some_and(|s| standard.contains(&s)), "a radius-2 node does not standardize");
    }
    Ok(format!("{}; {} radius-2 nodes standardize", summary.join(", "), explored.nodes.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "garside kernel vs reversing oracle", c1_garside_kernel),
        (2, "worked examples", c2_worked_examples),
        (3, "E8 parabolic conjugacy", c3_e8_conjugacy),
        (4, "maximal simplices and levels", c4_maximal_simplices),
        (5, "canonical standardizer round trips", c5_ascending_round_trips),
        (6, "ribbon delta forms", c6_ribbons),
        (7, "standard transversal markings", c7_markings),
        (8, "elementary moves", c8_moves),
        (9, "A2 stabilizer probe", c9_stabilizer),
        (10, "standard marking connectivity", c10_connectivity),
    ];
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (n, name, f) in criteria {
        if !only.is_empty() && !only.contains(&n) {
            continue;
        }
        let start = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("PASS {n:>2} {name}: {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL {n:>2} {name}: {why} ({secs:.1}s)");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
