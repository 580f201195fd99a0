//! Exhaustive verification suites over small grids.
//!
//! A suite expands into jobs, one per grid point, each producing a few
//! claims that share the point's enumeration. Jobs run on the rayon pool;
//! results are collected in job order, so reports are reproducible.

use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use vpro_core::json::PPartitionJson;
use vpro_core::multiword::{
    generalized_bump_diagram_ordered, promoted_double_arc, tau_word, word_of_layers, ArcColor,
};
use vpro_core::poset::first_linear_extension;
use vpro_core::ppartition::{rowmotion_along, togpro_groups, togpro_with};
use vpro_core::*;

use crate::error::{Error, Result};
use crate::oracles;
use crate::orbit::{orbit_decomposition, orbits, OrbitReport, Orbits, Params};
use crate::report::{Claim, VerificationReport};

pub const SUITES: [&str; 9] = [
    "main",
    "rowmotion",
    "layers",
    "doublearcs",
    "standardization",
    "classical",
    "equivariance",
    "figures",
    "properties",
];

pub const DEFAULT_CEILING: usize = 5_000_000;

/// Grid bounds; unset fields fall back to per-suite defaults.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub ell_max: Option<usize>,
    pub q_max: Option<usize>,
    pub sum_max: Option<usize>,
    pub ceiling: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            ell_max: None,
            q_max: None,
            sum_max: None,
            ceiling: DEFAULT_CEILING,
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Grid {
    ell_max: usize,
    q_max: usize,
    sum_max: usize,
}

impl Grid {
    fn resolve(suite: &str, c: &SuiteConfig) -> Grid {
        let (ell, q, sum) = match suite {
            "main" => (3, 7, 10),
            "rowmotion" => (3, 6, usize::MAX),
            "classical" => (3, 0, usize::MAX),
            _ => (2, 6, usize::MAX),
        };
        Grid {
            ell_max: c.ell_max.unwrap_or(ell),
            q_max: c.q_max.unwrap_or(q),
            sum_max: c.sum_max.unwrap_or(sum),
        }
    }

    /// `(ell, q)` with `1 <= ell <= ell_max`, `3 <= q <= q_max`.
    fn points(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for ell in 1..=self.ell_max {
            for q in 3..=self.q_max {
                if ell + q <= self.sum_max {
                    out.push((ell, q));
                }
            }
        }
        out
    }
}

type Job = Box<dyn Fn() -> Vec<Claim> + Send + Sync>;

pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let names: Vec<&str> = match name {
        "all" => SUITES.to_vec(),
        n if SUITES.contains(&n) => vec![n],
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    let mut jobs: Vec<Job> = Vec::new();
    for suite in names {
        let grid = Grid::resolve(suite, config);
        check_ceiling(suite, &grid, config.ceiling)?;
        jobs.extend(jobs_for(suite, &grid));
    }
    let claims = jobs.par_iter().flat_map_iter(|job| job()).collect();
    Ok(VerificationReport {
        suite: name.to_string(),
        claims,
        duration_ms: start.elapsed().as_millis() as u64,
    })
}

fn check_ceiling(suite: &str, grid: &Grid, ceiling: usize) -> Result<()> {
    if suite == "figures" {
        return Ok(());
    }
    if suite == "classical" {
        for n in 1..=grid.ell_max {
            let count = oracles::kreweras_count(n as u32);
            if count > ceiling as u128 {
                return Err(Error::GridTooLarge {
                    point: format!("n={n}"),
                    count: count.min(usize::MAX as u128) as usize,
                    ceiling,
                });
            }
        }
        return Ok(());
    }
    // Labelings of V x [ell] in [q] and ell-bounded P-partitions of
    // V x [q-2] are equinumerous, so one count bounds both.
    for (ell, q) in grid.points() {
        let count = enumerate_labelings(ell, q)?.take(ceiling + 1).count();
        if count > ceiling {
            return Err(Error::GridTooLarge {
                point: format!("ell={ell},q={q}"),
                count,
                ceiling,
            });
        }
    }
    Ok(())
}

fn jobs_for(suite: &str, grid: &Grid) -> Vec<Job> {
    fn per_point(grid: &Grid, f: fn(usize, usize) -> Vec<Claim>) -> Vec<Job> {
        grid.points()
            .into_iter()
            .map(|(ell, q)| Box::new(move || f(ell, q)) as Job)
            .collect()
    }
    match suite {
        "main" => per_point(grid, main_claims),
        "rowmotion" => per_point(grid, rowmotion_claims),
        "layers" => per_point(grid, layer_claims),
        "doublearcs" => per_point(grid, double_arc_claims),
        "standardization" => per_point(grid, standardization_claims),
        "equivariance" => per_point(grid, equivariance_claims),
        "properties" => {
            let mut jobs = per_point(grid, property_claims);
            for n in 1..=grid.ell_max.min(3) {
                jobs.push(Box::new(move || vec![bender_knuth_claim(n)]));
            }
            jobs
        }
        "classical" => (1..=grid.ell_max)
            .map(|n| Box::new(move || classical_claims(n)) as Job)
            .collect(),
        "figures" => vec![Box::new(figure_claims)],
        _ => unreachable!("suite names are checked by run_suite"),
    }
}

pub const ACTIONS: [&str; 5] = ["pro-linext", "pro-pstrict", "pro-kreweras", "row", "togpro"];

/// Orbit report of a named action. For `pro-linext` and `pro-kreweras`,
/// `ell` is the chain length `n` and `q` is reported as `3n`; for `row` and
/// `togpro` the poset is `V x [q - 2]` with bound `ell`.
pub fn orbit_report(action: &str, ell: usize, q: usize) -> Result<OrbitReport> {
    let needs_q = |q: usize| {
        if q < 3 {
            Err(Error::InvalidParams(format!("q must be at least 3, got {q}")))
        } else {
            Ok(q)
        }
    };
    let (params, mut report, bound) = match action {
        "pro-linext" | "pro-kreweras" => {
            if ell == 0 {
                return Err(Error::InvalidParams("n must be at least 1".into()));
            }
            let params = Params { ell, q: 3 * ell };
            let report = if action == "pro-linext" {
                orbit_decomposition(action, params, linear_extensions(&v_times(ell)).collect(), promote_linext)?
            } else {
                orbit_decomposition(action, params, KrewerasWord::all(ell), KrewerasWord::promote)?
            };
            (params, report, 6 * ell as u64)
        }
        "pro-pstrict" => {
            let q = needs_q(q)?;
            let params = Params { ell, q };
            let report = orbit_decomposition(action, params, labelings(ell, q), promote_pstrict)?;
            (params, report, 2 * q as u64)
        }
        "row" | "togpro" => {
            let q = needs_q(q)?;
            let params = Params { ell, q };
            let poset = v_times(q - 2);
            let elements = enumerate_ppartitions(&poset, ell);
            let report = if action == "row" {
                let seq = first_linear_extension(&poset).sequence();
                orbit_decomposition(action, params, elements, |f| rowmotion_along(f, &seq))?
            } else {
                let groups = togpro_groups(q)?;
                orbit_decomposition(action, params, elements, |f| togpro_with(f, &groups))?
            };
            (params, report, 2 * q as u64)
        }
        other => return Err(Error::UnknownAction(other.to_string())),
    };
    debug_assert_eq!(report.params, params);
    let divides = bound.is_multiple_of(report.order);
    report.checks.insert(format!("order_divides_{bound}"), divides);
    Ok(report)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn pp_value(f: &PPartition) -> Value {
    PPartitionJson::from_ppartition(f).map(|j| to_value(&j)).unwrap_or(Value::Null)
}

/// The first item, in order, for which `check` reports a counterexample.
fn first_failure<T: Sync>(items: &[T], check: impl Fn(&T) -> Option<Value> + Sync + Send) -> Option<Value> {
    items.par_iter().find_map_first(check)
}

fn orbit_summary<T>(o: &Orbits<T>) -> Value {
    json!({"order": o.order(), "orbit_sizes": o.sizes()})
}

fn labelings(ell: usize, q: usize) -> Vec<PStrictLabeling> {
    enumerate_labelings(ell, q).expect("q >= 3").collect()
}

fn v_times(k: usize) -> Arc<Poset> {
    Arc::new(product_with_chain(&make_v(), k).expect("k >= 1"))
}

fn main_claims(ell: usize, q: usize) -> Vec<Claim> {
    let params = json!({"ell": ell, "q": q});
    let pro = match orbits(labelings(ell, q), promote_pstrict) {
        Ok(o) => o,
        Err(e) => return vec![Claim::new("main.order_divides_2q", params, Some(json!(e.to_string())))],
    };
    let divides = (2 * q as u64).is_multiple_of(pro.order());
    let idx: Vec<usize> = (0..pro.elements.len()).collect();
    let swap = first_failure(&idx, |&i| {
        let f = &pro.elements[i];
        let g = &pro.elements[pro.step(i, q)];
        (*g != f.flip_bc()).then(|| json!({"labeling": to_value(f), "pro_q": to_value(g)}))
    });
    vec![
        Claim::new("main.order_divides_2q", params.clone(), (!divides).then(|| orbit_summary(&pro))),
        Claim::new("main.pro_q_swaps_b_and_c", params, swap),
    ]
}

fn rowmotion_claims(ell: usize, q: usize) -> Vec<Claim> {
    let k = q - 2;
    let params = json!({"ell": ell, "k": k, "q": q});
    let poset = v_times(k);
    let seq = first_linear_extension(&poset).sequence();
    let row = match orbits(enumerate_ppartitions(&poset, ell), |f| rowmotion_along(f, &seq)) {
        Ok(o) => o,
        Err(e) => return vec![Claim::new("rowmotion.order_divides", params, Some(json!(e.to_string())))],
    };
    let mut claims = vec![Claim::new(
        "rowmotion.order_divides",
        params.clone(),
        (!(2 * q as u64).is_multiple_of(row.order())).then(|| orbit_summary(&row)),
    )];
    if ell == 1 {
        claims.push(Claim::new(
            "rowmotion.order_exact",
            params.clone(),
            (row.order() != 2 * q as u64).then(|| orbit_summary(&row)),
        ));
    }
    let flip = PosetAutomorphism::flip(Arc::clone(&poset)).expect("V x [k] has a flip");
    let idx: Vec<usize> = (0..row.elements.len()).collect();
    let flip_fail = first_failure(&idx, |&i| {
        let f = &row.elements[i];
        let g = &row.elements[row.step(i, q)];
        let expected = apply_automorphism(&flip, f).expect("same poset");
        (*g != expected).then(|| json!({"partition": pp_value(f), "row_q": pp_value(g)}))
    });
    claims.push(Claim::new("rowmotion.row_q_is_flip", params.clone(), flip_fail));
    let mut rng = ChaCha8Rng::seed_from_u64((ell * 1000 + k) as u64);
    let others: Vec<Vec<usize>> = (0..3)
        .map(|_| oracles::random_linear_extension(&poset, &mut rng).sequence())
        .collect();
    let indep = first_failure(&idx, |&i| {
        let f = &row.elements[i];
        let g = &row.elements[row.image[i]];
        others.iter().find_map(|s| {
            let h = rowmotion_along(f, s);
            (h != *g).then(|| json!({"partition": pp_value(f), "sequence": s, "found": pp_value(&h)}))
        })
    });
    claims.push(Claim::new("rowmotion.extension_independent", params, indep));
    claims
}

fn layer_claims(ell: usize, q: usize) -> Vec<Claim> {
    let params = json!({"ell": ell, "q": q});
    let words: Vec<_> = labelings(ell, q).iter().map(word_of_labeling).collect();
    let wv = |w: &PartialMultiKrewerasWord| json!({"word": w.to_string(), "json": to_value(w)});
    let rotation = first_failure(&words, |w| {
        let rotated: Vec<VLayer> = layer_decomposition(w).iter().map(|l| l.promote(q)).collect();
        let pro = promote_word(w);
        (word_of_layers(&rotated, q).ok().as_ref() != Some(&pro)).then(|| {
            let mut v = wv(w);
            v["promoted_layers"] = to_value(&rotated);
            v
        })
    });
    let rebuild = first_failure(&words, |w| {
        (word_of_layers(&layer_decomposition(w), q).ok().as_ref() != Some(w)).then(|| wv(w))
    });
    let order_free = first_failure(&words, |w| {
        let rev = generalized_bump_diagram_ordered(w, |_, n| (0..n).rev().collect());
        let canonical = generalized_bump_diagram(w);
        (rev.layers() != canonical.layers() || !canonical.is_noncrossing()).then(|| wv(w))
    });
    let conj = first_failure(&words, |w| {
        let by_taus = (1..q).try_fold(w.clone(), |x, k| tau_word(k, &x));
        let direct = word_of_labeling(&promote_pstrict(&labeling_of_word(w)));
        (by_taus.ok().as_ref() != Some(&direct) || promote_word(w) != direct).then(|| wv(w))
    });
    let shortest = first_failure(&words, |w| {
        let shifted: Vec<(ArcColor, usize, usize)> = generalized_bump_diagram(w)
            .shortest_arcs()
            .into_iter()
            .filter(|&(_, a, _)| a > 1)
            .map(|(c, a, b)| (c, a - 1, b - 1))
            .collect();
        let mut target = generalized_bump_diagram(&promote_word(w)).shortest_arcs();
        let contained = shifted.iter().all(|t| match target.iter().position(|x| x == t) {
            Some(i) => {
                target.swap_remove(i);
                true
            }
            None => false,
        });
        (!contained).then(|| wv(w))
    });
    vec![
        Claim::new("layers.content_rotation", params.clone(), rotation),
        Claim::new("layers.reconstruct_word", params.clone(), rebuild),
        Claim::new("layers.independent_of_a_order", params.clone(), order_free),
        Claim::new("layers.word_promotion_conjugates", params.clone(), conj),
        Claim::new("layers.shortest_arc_shift", params, shortest),
    ]
}

fn double_arc_claims(ell: usize, q: usize) -> Vec<Claim> {
    let params = json!({"ell": ell, "q": q});
    let words: Vec<_> = labelings(ell, q).iter().map(word_of_labeling).collect();
    let wv = |w: &PartialMultiKrewerasWord| json!({"word": w.to_string(), "json": to_value(w)});
    let count = first_failure(&words, |w| {
        (double_arcs(w).len() != double_arcs(&promote_word(w)).len()).then(|| wv(w))
    });
    let endpoints = first_failure(&words, |w| {
        let mut moved: Vec<_> = double_arcs(w).into_iter().map(|d| promoted_double_arc(d, q)).collect();
        moved.sort_unstable();
        (moved != double_arcs(&promote_word(w))).then(|| wv(w))
    });
    let deletion = first_failure(&words, |w| {
        let pro = promote_word(w);
        double_arcs(w).into_iter().find_map(|d| {
            let lhs = delete_double_arc(&pro, promoted_double_arc(d, q));
            let rhs = delete_double_arc(w, d).map(|x| promote_word(&x));
            (lhs.is_err() || lhs != rhs).then(|| {
                let mut v = wv(w);
                v["double_arc"] = json!([d.0, d.1]);
                v
            })
        })
    });
    vec![
        Claim::new("doublearcs.count_invariant", params.clone(), count),
        Claim::new("doublearcs.endpoint_map", params.clone(), endpoints),
        Claim::new("doublearcs.deletion_commutes", params, deletion),
    ]
}

fn standardization_claims(ell: usize, q: usize) -> Vec<Claim> {
    let params = json!({"ell": ell, "q": q});
    let words: Vec<_> = labelings(ell, q)
        .iter()
        .map(word_of_labeling)
        .filter(|w| double_arcs(w).is_empty())
        .collect();
    let wv = |w: &PartialMultiKrewerasWord| json!({"word": w.to_string(), "json": to_value(w)});
    let law = first_failure(&words, |w| {
        let (s, sizes) = standardize(w).ok()?;
        let lhs = standardize(&promote_word(w)).map(|x| x.0);
        (lhs != Ok(s.promote_n(sizes[0]))).then(|| wv(w))
    });
    let roundtrip = first_failure(&words, |w| {
        let ok = standardize(w).is_ok_and(|(s, sizes)| {
            KrewerasWord::new(s.letters().to_vec()).is_ok()
                && destandardize(&s, &sizes).as_ref() == Ok(w)
                && same_block_arcs_nest(&s, &sizes)
        });
        (!ok).then(|| wv(w))
    });
    vec![
        Claim::new("standardization.law", params.clone(), law),
        Claim::new("standardization.roundtrip", params, roundtrip),
    ]
}

/// Arcs of either color whose closers share a block never cross.
fn same_block_arcs_nest(s: &KrewerasWord, sizes: &[usize]) -> bool {
    let mut block_of = Vec::with_capacity(s.len());
    for (b, &n) in sizes.iter().enumerate() {
        block_of.extend(std::iter::repeat_n(b, n));
    }
    let d = bump_diagram(s);
    let arcs: Vec<_> = d.arcs_b.iter().chain(&d.arcs_c).copied().collect();
    arcs.iter().enumerate().all(|(i, &x)| {
        arcs[i + 1..].iter().all(|&y| {
            block_of[x.1 - 1] != block_of[y.1 - 1] || !vpro_core::kreweras::crosses(x, y)
        })
    })
}

fn classical_claims(n: usize) -> Vec<Claim> {
    let params = json!({"n": n});
    let poset = v_times(n);
    let exts: Vec<_> = linear_extensions(&poset).collect();
    let expected = oracles::kreweras_count(n as u32);
    let count_fail = (exts.len() as u128 != expected || KrewerasWord::all(n).len() as u128 != expected)
        .then(|| json!({"extensions": exts.len(), "formula": expected.to_string()}));
    let intertwine = first_failure(&exts, |e| {
        let w = to_kreweras(e).ok()?;
        (to_kreweras(&promote_linext(e)).as_ref() != Ok(&w.promote())).then(|| json!({"labels": e.labels()}))
    });
    let mut claims = vec![
        Claim::new("classical.count_formula", params.clone(), count_fail),
        Claim::new("classical.kreweras_intertwines", params.clone(), intertwine),
    ];
    // Two extensions of V x [1] just swap, so equality needs n >= 2.
    let exact = if n == 1 { 2 } else { 6 * n as u64 };
    let order = |name: &str, o: Result<u64>| {
        let fail = match o {
            Ok(order) => (order != exact).then(|| json!({"order": order, "expected": exact})),
            Err(e) => Some(json!(e.to_string())),
        };
        Claim::new(name, params.clone(), fail)
    };
    claims.push(order("classical.order_6n", orbits(exts, promote_linext).map(|o| o.order())));
    claims.push(order(
        "classical.kreweras_order_6n",
        orbits(KrewerasWord::all(n), KrewerasWord::promote).map(|o| o.order()),
    ));
    claims
}

fn equivariance_claims(ell: usize, q: usize) -> Vec<Claim> {
    let params = json!({"ell": ell, "q": q});
    let poset = v_times(q - 2);
    let seq = first_linear_extension(&poset).sequence();
    let groups = togpro_groups(q).expect("q >= 3");
    let sizes = |o: Result<Vec<usize>>| o.map(|mut s| {
        s.sort_unstable();
        s
    });
    let pro = sizes(orbits(labelings(ell, q), promote_pstrict).map(|o| o.sizes()));
    let tog = sizes(orbits(enumerate_ppartitions(&poset, ell), |f| togpro_with(f, &groups)).map(|o| o.sizes()));
    let row = sizes(orbits(enumerate_ppartitions(&poset, ell), |f| rowmotion_along(f, &seq)).map(|o| o.sizes()));
    let fail = match (&pro, &tog, &row) {
        (Ok(a), Ok(b), Ok(c)) if a == b && b == c => None,
        _ => Some(json!({
            "pro_pstrict": pro.map_err(|e| e.to_string()),
            "togpro": tog.map_err(|e| e.to_string()),
            "row": row.map_err(|e| e.to_string()),
        })),
    };
    vec![Claim::new("equivariance.orbit_multisets", params, fail)]
}

fn property_claims(ell: usize, q: usize) -> Vec<Claim> {
    let params = json!({"ell": ell, "q": q});
    let fs = labelings(ell, q);
    let fv = |f: &PStrictLabeling| to_value(f);
    let involution = first_failure(&fs, |f| {
        (1..q).find_map(|k| {
            let g = bender_knuth_tau(k, f).ok()?;
            (!g.is_valid() || bender_knuth_tau(k, &g).as_ref() != Ok(f)).then(|| json!({"labeling": fv(f), "k": k}))
        })
    });
    let free = first_failure(&fs, |f| {
        Letter::ALL.into_iter().find_map(|p| {
            (1..=ell).find_map(|i| {
                let local = (f.is_raisable(p, i), f.is_lowerable(p, i));
                (local != oracles::free_by_search(f, p, i))
                    .then(|| json!({"labeling": fv(f), "fiber": p, "layer": i}))
            })
        })
    });
    let roundtrip = first_failure(&fs, |f| {
        let w = word_of_labeling(f);
        let text: Option<PartialMultiKrewerasWord> = w.to_string().parse().ok();
        let json_back: Option<PStrictLabeling> = serde_json::to_string(f).ok().and_then(|s| serde_json::from_str(&s).ok());
        (labeling_of_word(&w) != *f || text.as_ref() != Some(&w) || json_back.as_ref() != Some(f))
            .then(|| json!({"labeling": fv(f)}))
    });
    let mut words: Vec<_> = fs.iter().map(word_of_labeling).collect();
    words.sort_unstable();
    words.dedup();
    let poset = v_times(q - 2);
    let pps = enumerate_ppartitions(&poset, ell);
    let filtered_labelings = (q as f64).powi(3 * ell as i32) <= 2e6;
    let filtered_pps = ((ell + 1) as f64).powi(3 * (q - 2) as i32) <= 2e6;
    let validators = if !fs.iter().all(PStrictLabeling::is_valid) || !pps.iter().all(PPartition::is_valid) {
        Some(json!("enumerated object rejected by its validator"))
    } else if words.len() != fs.len() || pps.len() != fs.len() {
        Some(json!({"labelings": fs.len(), "distinct_words": words.len(), "ppartitions": pps.len()}))
    } else if filtered_labelings && oracles::count_labelings_by_filter(ell, q) != fs.len() {
        Some(json!({"labelings": fs.len(), "filtered": oracles::count_labelings_by_filter(ell, q)}))
    } else if filtered_pps && oracles::count_ppartitions_by_filter(&poset, ell) != pps.len() {
        Some(json!({"ppartitions": pps.len(), "filtered": oracles::count_ppartitions_by_filter(&poset, ell)}))
    } else {
        None
    };
    let flip = PosetAutomorphism::flip(Arc::clone(&poset)).expect("flip exists");
    let toggles = first_failure(&pps, |f| {
        (0..poset.len()).find_map(|x| {
            let g = toggle(x, f).ok()?;
            let psi_f = apply_automorphism(&flip, f).ok()?;
            let conj = apply_automorphism(&flip, &toggle(flip.image(x), f).ok()?).ok()?;
            (!g.is_valid() || toggle(x, &g).as_ref() != Ok(f) || toggle(x, &psi_f).ok() != Some(conj))
                .then(|| json!({"partition": pp_value(f), "element": poset.id(x).to_string()}))
        })
    });
    vec![
        Claim::new("properties.tau_involution", params.clone(), involution),
        Claim::new("properties.free_labels_match_search", params.clone(), free),
        Claim::new("properties.word_roundtrip", params.clone(), roundtrip),
        Claim::new("properties.validators_and_counts", params.clone(), validators),
        Claim::new("properties.toggles", params, toggles),
    ]
}

fn bender_knuth_claim(n: usize) -> Claim {
    let exts: Vec<_> = linear_extensions(&v_times(n)).collect();
    let fail = first_failure(&exts, |e| {
        (1..3 * n).find_map(|i| {
            let once = bender_knuth(i, e).ok()?;
            (bender_knuth(i, &once).as_ref() != Ok(e)).then(|| json!({"labels": e.labels(), "i": i}))
        })
    });
    Claim::new("properties.bender_knuth_involution", json!({"n": n}), fail)
}

pub mod figures {
    //! Expected values for the worked examples.

    pub const EXT_A: [usize; 6] = [1, 3, 6, 7, 11, 14];
    pub const EXT_B: [usize; 6] = [4, 5, 8, 13, 15, 18];
    pub const EXT_C: [usize; 6] = [2, 9, 10, 12, 16, 17];
    pub const PRO_EXT_A: [usize; 6] = [1, 2, 5, 6, 10, 13];
    pub const PRO_EXT_B: [usize; 6] = [3, 4, 7, 12, 14, 17];
    pub const PRO_EXT_C: [usize; 6] = [8, 9, 11, 15, 16, 18];
    pub const WORD: &str = "ACABBAABCCACBABCCB";
    pub const PRO_WORD: &str = "AABBAABCCACBABCCBC";
    pub const ARCS_B: [(usize, usize); 6] = [(1, 5), (3, 4), (6, 18), (7, 8), (11, 13), (14, 15)];
    pub const ARCS_C: [(usize, usize); 6] = [(1, 2), (3, 17), (6, 10), (7, 9), (11, 12), (14, 16)];
    pub const MULTI_Q: usize = 9;
    pub const MULTI_A: [usize; 6] = [1, 2, 3, 3, 4, 6];
    pub const MULTI_B: [usize; 6] = [3, 3, 4, 6, 7, 9];
    pub const MULTI_C: [usize; 6] = [2, 4, 4, 5, 8, 8];
    pub const MULTI: &str = "A|CA|BBAA|BCCA|C|BA|B|CC|B";
    pub const LAYERS: [(usize, usize, usize); 6] = [(1, 3, 2), (2, 3, 8), (3, 9, 4), (3, 4, 4), (4, 6, 5), (6, 7, 8)];
    pub const PRO_MULTI: &str = "AA|BBAA|BCCA|C|BA|B|CC|B|C";
    pub const PRO_LAYERS: [(usize, usize, usize); 6] = [(1, 2, 9), (1, 2, 7), (2, 8, 3), (2, 3, 3), (3, 5, 4), (5, 6, 7)];
    pub const DOUBLE_ARC: (usize, usize) = (3, 4);
    pub const PRO_DOUBLE_ARC: (usize, usize) = (2, 3);
    pub const DELETED: &str = "A|CA|BBA|CA|C|BA|B|CC|B";
    /// `(word, standardization, block sizes)`.
    pub const STANDARDIZATIONS: [(&str, &str, [usize; 4]); 2] =
        [("∅|AA|CC|BB", "AACCBB", [0, 2, 2, 2]), ("A|A|CC|BB", "AACCBB", [1, 1, 2, 2])];
}

fn golden(id: &str, expected: String, found: String) -> Claim {
    let fail = (expected != found).then(|| json!({"expected": expected, "found": found}));
    Claim::new(id, json!({}), fail)
}

fn figure_claims() -> Vec<Claim> {
    use figures::*;
    let ext = |a: [usize; 6], b: [usize; 6], c: [usize; 6]| {
        let labels = a.iter().chain(&b).chain(&c).copied().collect();
        LinearExtension::new(v_times(6), labels).expect("figure extension is valid")
    };
    let show = |e: &LinearExtension| format!("{:?}", e.labels());
    let e = ext(EXT_A, EXT_B, EXT_C);
    let mut claims = vec![golden(
        "figures.linext_promotion",
        show(&ext(PRO_EXT_A, PRO_EXT_B, PRO_EXT_C)),
        show(&promote_linext(&e)),
    )];
    let word = to_kreweras(&e).map(|w| w.to_string()).unwrap_or_default();
    let pro_word = to_kreweras(&promote_linext(&e))
        .map(|w| w.to_string())
        .unwrap_or_default();
    let direct = WORD.parse::<KrewerasWord>().map(|w| w.promote().to_string()).unwrap_or_default();
    claims.push(golden(
        "figures.kreweras_pair",
        format!("{WORD} -> {PRO_WORD} -> {PRO_WORD}"),
        format!("{word} -> {pro_word} -> {direct}"),
    ));
    let d = bump_diagram(&WORD.parse().expect("figure word"));
    claims.push(golden(
        "figures.bump_diagram",
        format!("{:?} {:?}", ARCS_B, ARCS_C),
        format!("{:?} {:?}", d.arcs_b, d.arcs_c),
    ));
    let f = PStrictLabeling::new(MULTI_Q, MULTI_A.to_vec(), MULTI_B.to_vec(), MULTI_C.to_vec())
        .expect("figure labeling is valid");
    let w = word_of_labeling(&f);
    claims.push(golden("figures.multi_word", MULTI.to_string(), w.to_string()));
    let gd = generalized_bump_diagram(&w);
    let layers: Vec<_> = (0..gd.ell()).map(|i| gd.layer(i)).map(|l| (l.a, l.b, l.c)).collect();
    claims.push(golden("figures.layers", format!("{LAYERS:?}"), format!("{layers:?}")));
    let pro = promote_word(&w);
    let pd = generalized_bump_diagram(&pro);
    let pro_layers: Vec<_> = (0..pd.ell()).map(|i| pd.layer(i)).map(|l| (l.a, l.b, l.c)).collect();
    let mut rotated: Vec<_> = LAYERS
        .iter()
        .map(|&(a, b, c)| VLayer::new(a, b, c).promote(MULTI_Q))
        .map(|l| (l.a, l.b, l.c))
        .collect();
    rotated.sort_unstable();
    let mut expected_sorted = PRO_LAYERS.to_vec();
    expected_sorted.sort_unstable();
    claims.push(golden(
        "figures.promoted_layers",
        format!("{PRO_MULTI} {PRO_LAYERS:?} {expected_sorted:?}"),
        format!("{pro} {pro_layers:?} {rotated:?}"),
    ));
    let deleted = delete_double_arc(&w, DOUBLE_ARC).map(|x| x.to_string()).unwrap_or_default();
    claims.push(golden(
        "figures.double_arc",
        format!("{:?} {:?} {DELETED}", [DOUBLE_ARC], [PRO_DOUBLE_ARC]),
        format!("{:?} {:?} {deleted}", double_arcs(&w), double_arcs(&pro)),
    ));
    for (i, (src, std_word, sizes)) in STANDARDIZATIONS.iter().enumerate() {
        let found = src
            .parse::<PartialMultiKrewerasWord>()
            .and_then(|x| standardize(&x))
            .map(|(s, z)| {
                let back = destandardize(&s, &z).map(|b| b.to_string()).unwrap_or_default();
                format!("{s} {z:?} {back}")
            })
            .unwrap_or_else(|e| e.to_string());
        claims.push(golden(
            &format!("figures.standardization_{}", i + 1),
            format!("{std_word} {sizes:?} {src}"),
            found,
        ));
    }
    claims
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_and_ceiling() {
        assert!(matches!(
            run_suite("nope", &SuiteConfig::default()),
            Err(Error::UnknownSuite(_))
        ));
        let tight = SuiteConfig {
            ceiling: 10,
            ..SuiteConfig::default()
        };
        assert!(matches!(run_suite("main", &tight), Err(Error::GridTooLarge { .. })));
    }

    #[test]
    fn documented_orbits() {
        let r = orbit_report("pro-pstrict", 1, 3).unwrap();
        assert_eq!((r.orbit_sizes.clone(), r.order), (vec![3, 2], 6));
        let r = orbit_report("pro-linext", 1, 0).unwrap();
        assert_eq!((r.orbit_sizes.clone(), r.order), (vec![2], 2));
        let r = orbit_report("row", 1, 3).unwrap();
        assert_eq!((r.sorted_sizes(), r.order), (vec![2, 3], 6));
        assert!(r.checks.values().all(|&b| b));
        assert!(matches!(orbit_report("spin", 1, 3), Err(Error::UnknownAction(_))));
        assert!(matches!(orbit_report("row", 1, 2), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn figures_pass() {
        let r = run_suite("figures", &SuiteConfig::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.claims.len(), 9);
    }

    #[test]
    fn small_grids_pass() {
        let c = SuiteConfig {
            ell_max: Some(1),
            q_max: Some(4),
            ..SuiteConfig::default()
        };
        let r = run_suite("all", &c).unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}
