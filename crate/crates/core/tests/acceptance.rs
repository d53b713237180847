//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use anticode::analysis::{
    average_from_union, coset_alpha, exact_error_ml, exact_error_sequential, gv_threshold,
    union_measure,
};
use anticode::channel::info_quantities;
use anticode::codes::{gv_random_code, lookup, GvOptions};
use anticode::gf4::all_words;
use anticode::report::{
    four_digits, matches_four_digits, reproduce_example1, reproduce_table1, MatchFlag,
};
use anticode::sim::{estimate_error, run_protocol, MonteCarloConfig, Selection};
use anticode::{Budget, Codebook, DecoderKind, Exact, LinearCode, Scalar, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Option<f64>, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn within(elapsed: Duration, limit_s: f64, r: Outcome) -> Outcome {
    let t = elapsed.as_secs_f64();
    match r {
        Ok(d) if t < limit_s => Ok(format!("{d}; {t:.2}s < {limit_s}s")),
        Ok(d) => Err(format!("{d}; too slow: {t:.2}s >= {limit_s}s")),
        Err(d) => Err(format!("{d}; {t:.2}s")),
    }
}

fn timed(limit_s: Option<f64>, f: fn() -> Outcome) -> Outcome {
    let start = Instant::now();
    let r = f();
    match limit_s {
        Some(l) => within(start.elapsed(), l, r),
        None => r,
    }
}

fn no_diff(y: &Word, c: &Word) -> bool {
    (0..y.len()).all(|p| y.get(p) != c.get(p))
}

fn channel_quantities() -> Outcome {
    let q = info_quantities();
    let cap_ok =
        (q.capacity - 0.4150).abs() < 5e-5 && (q.capacity - (4.0f64 / 3.0).log2()).abs() < 1e-12;
    let hy_ok = q.h_y == 2.0;
    let hyx_ok = (q.h_y_given_x - 3f64.log2()).abs() < 1e-9;
    check(
        cap_ok && hy_ok && hyx_ok,
        format!(
            "capacity={:.6} H(Y)={} H(Y|X)={:.10}",
            q.capacity, q.h_y, q.h_y_given_x
        ),
    )
}

fn table_reproduction() -> Outcome {
    let rows = reproduce_table1();
    let row = |name: &str| rows.iter().find(|r| r.name == name).cloned();
    let mut bad = Vec::new();
    for (name, printed) in [
        ("[100,10,62]", 6.337e-6),
        ("[50,5,35]", 3.516e-4),
        ("[30,3,22]", 4.277e-3),
        ("[20,2,16]", 1.218e-2),
        ("[200,20,109]", 3.517e-8),
        ("[250,25,136]", 6.340e-10),
    ] {
        match row(name) {
            Some(r) if matches_four_digits(r.loose, printed) && r.flag.matched() => {}
            Some(r) => bad.push(format!("{name} loose {}", four_digits(r.loose))),
            None => bad.push(format!("{name} missing")),
        }
    }
    match row("[10,1,10]") {
        Some(r) if r.flag == MatchFlag::Tight && four_digits(r.tight) == "2.601e-2" => {}
        Some(r) => bad.push(format!(
            "[10,1,10] tight {} flag {}",
            four_digits(r.tight),
            r.flag
        )),
        None => bad.push("[10,1,10] missing".into()),
    }
    let tight_only = rows.iter().filter(|r| r.flag == MatchFlag::Tight).count();
    let unmatched: Vec<&str> = rows
        .iter()
        .filter(|r| !r.flag.matched())
        .map(|r| r.name.as_str())
        .collect();
    check(
        bad.is_empty(),
        if bad.is_empty() {
            format!(
                "{} rows, 7 listed rows reproduced, {tight_only} tight-only, unmatched: {unmatched:?}",
                rows.len()
            )
        } else {
            bad.join(", ")
        },
    )
}

fn example_bounds() -> Outcome {
    let items = reproduce_example1(&Budget::default()).map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    let mut ok = true;
    for (item, printed) in [(1u8, 0.03038), (2, 0.01216)] {
        let v = items[item as usize - 1].theorem1.unwrap_or(f64::NAN);
        let m = matches_four_digits(v, printed);
        ok &= m;
        parts.push(format!(
            "thm1 item {item} {} vs {printed} {}",
            four_digits(v),
            if m { "ok" } else { "MISMATCH" }
        ));
    }
    for (item, printed) in [(1u8, 0.03849), (2, 0.01711), (3, 0.006008), (4, 0.001502)] {
        let v = items[item as usize - 1].bounds.loose;
        let m = matches_four_digits(v, printed);
        ok &= m;
        parts.push(format!(
            "loose item {item} {} {}",
            four_digits(v),
            if m { "ok" } else { "MISMATCH" }
        ));
    }
    check(ok, parts.join(", "))
}

fn quasi_cyclic() -> Outcome {
    let entry = lookup("[40,5,28]").ok_or("catalog entry missing")?;
    let code = entry
        .code()
        .ok_or("no generator")?
        .map_err(|e| e.to_string())?;
    let budget = Budget::default();
    let count = code.codewords(&budget).map_err(|e| e.to_string())?.count();
    // Minimum distance from the weights of the enumerated codewords.
    let d = code
        .codewords(&budget)
        .map_err(|e| e.to_string())?
        .map(|c| c.weight())
        .filter(|&w| w > 0)
        .min()
        .unwrap_or(0);
    let short = code.shorten(0).map_err(|e| e.to_string())?;
    let ds = short.minimum_distance(&budget).map_err(|e| e.to_string())?;
    check(
        code.n() == 40
            && code.k() == 5
            && count == 1024
            && d == 28
            && short.n() == 39
            && short.k() == 4
            && ds >= 28,
        format!(
            "n={} k={} codewords={count} d={d}; shortened [{},{}] d={ds}",
            code.n(),
            code.k(),
            short.n(),
            short.k()
        ),
    )
}

fn cross_method() -> Outcome {
    let budget = Budget::default();
    let mut parts = Vec::new();
    let mut ok = true;
    for (name, row, expected) in [
        ("n=1 full", "1", Some(Exact::ratio(2, 3))),
        ("n=2 diagonal", "11", Some(Exact::ratio(5, 9))),
        ("[10,1,10]", "1111111111", None),
    ] {
        let lin = LinearCode::from_rows(&[row]).unwrap();
        let book = lin.codebook(&budget).unwrap();
        let ml = exact_error_ml(&book, &budget)
            .map_err(|e| e.to_string())?
            .average;
        let cos = coset_alpha(&lin, &budget)
            .map_err(|e| e.to_string())?
            .average;
        let uni = average_from_union(
            lin.n(),
            book.len(),
            union_measure(&book, &budget).map_err(|e| e.to_string())?,
        )
        .map_err(|e| e.to_string())?;
        let agree = ml == cos && cos == uni;
        let value_ok = expected.as_ref().is_none_or(|e| *e == ml);
        ok &= agree && value_ok;
        parts.push(format!(
            "{name}: {ml}{}",
            if agree && value_ok { "" } else { " DISAGREE" }
        ));
    }
    check(ok, parts.join(", "))
}

fn repetition10() -> (LinearCode, Codebook, f64) {
    let lin = LinearCode::from_rows(&["1111111111"]).unwrap();
    let book = lin.codebook(&Budget::default()).unwrap();
    let exact = coset_alpha(&lin, &Budget::default())
        .unwrap()
        .average
        .to_f64();
    (lin, book, exact)
}

fn monte_carlo() -> Outcome {
    let (_, book, exact) = repetition10();
    let trials = 1_000_000u64;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let r = pool
        .install(|| {
            estimate_error(
                &book,
                &MonteCarloConfig::new(trials, 20_240_601, DecoderKind::Ml),
            )
        })
        .map_err(|e| e.to_string())?;
    let sigma = (exact * (1.0 - exact) / trials as f64).sqrt();
    let z = (r.average - exact) / sigma;
    check(
        z.abs() <= 4.0,
        format!("estimate={:.6} exact={exact:.6} z={z:.2}", r.average),
    )
}

fn geometry_oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0usize;
    for _ in 0..40 {
        let n = rng.random_range(1..=6);
        let m = rng.random_range(2..=5usize).min(4usize.pow(n as u32));
        let mut words: Vec<Word> = Vec::new();
        while words.len() < m {
            let w = Word::from_index(rng.random_range(0..4u128.pow(n as u32)), n);
            if !words.contains(&w) {
                words.push(w);
            }
        }
        let all: Vec<Word> = all_words(n).collect();
        let sets: Vec<Vec<bool>> = words
            .iter()
            .map(|c| all.iter().map(|y| no_diff(y, c)).collect())
            .collect();
        for s in &sets {
            let size = s.iter().filter(|&&b| b).count();
            if size != 3usize.pow(n as u32) {
                return Err(format!("|L(c)| = {size} for n = {n}"));
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let inter = (0..all.len()).filter(|&y| sets[i][y] && sets[j][y]).count();
                let s = (0..n)
                    .filter(|&p| words[i].get(p) != words[j].get(p))
                    .count();
                let formula = 3usize.pow((n - s) as u32) * 2usize.pow(s as u32);
                if inter != formula || inter < 2usize.pow(n as u32) {
                    return Err(format!("pair intersection {inter} vs {formula}"));
                }
                for k in j + 1..m {
                    if !(0..all.len()).any(|y| sets[i][y] && sets[j][y] && sets[k][y]) {
                        return Err("empty triple intersection".into());
                    }
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} codeword pairs on 40 random codes"))
}

fn sequential_first() -> Outcome {
    let budget = Budget::default();
    let books = [
        Codebook::parse("0 1 a b").unwrap(),
        Codebook::parse("0aa 111 a0b 1b0 bab").unwrap(),
        Codebook::parse("0000 1a1a b0b1 ab00 1111").unwrap(),
        LinearCode::from_rows(&["1a0b1", "01ab1"])
            .unwrap()
            .codebook(&budget)
            .unwrap(),
        repetition10().1,
    ];
    for (i, book) in books.iter().enumerate() {
        let r = exact_error_sequential(book, &budget).map_err(|e| e.to_string())?;
        if r.per_codeword[0] != Exact::ratio(0, 1) {
            return Err(format!("code {i}: exact e_1 = {}", r.per_codeword[0]));
        }
        let cfg = MonteCarloConfig {
            selection: Selection::Fixed(0),
            ..MonteCarloConfig::new(20_000, i as u64, DecoderKind::Sequential)
        };
        let sim = estimate_error(book, &cfg).map_err(|e| e.to_string())?;
        if sim.monte_carlo.unwrap().errors != 0 {
            return Err(format!("code {i}: simulated errors for c_1"));
        }
    }
    Ok(format!(
        "{} codes, exact and 20000 simulated trials each",
        books.len()
    ))
}

fn gv() -> Outcome {
    let (beta, rate): (f64, f64) = gv_threshold();
    if (beta - 0.4627).abs() > 5e-4 || (rate - 0.1353).abs() > 5e-4 {
        return Err(format!("beta={beta:.6} rate={rate:.6}"));
    }
    let mut ks = Vec::new();
    for seed in 0..10u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code =
            gv_random_code(20, 12, &mut rng, &GvOptions::default()).map_err(|e| e.to_string())?;
        // Independent check: pairwise distances over the explicit codebook.
        let book = code
            .codebook(&Budget::default())
            .map_err(|e| e.to_string())?;
        let words = book.words();
        let mut d = usize::MAX;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                d = d.min(
                    (0..20)
                        .filter(|&p| words[i].get(p) != words[j].get(p))
                        .count(),
                );
            }
        }
        if d < 12 {
            return Err(format!("seed {seed}: k={} d={d}", code.k()));
        }
        ks.push(code.k());
    }
    Ok(format!(
        "beta={beta:.6} rate={rate:.6}; [20,k>=1,>=12] for 10 seeds, k={ks:?}"
    ))
}

fn protocol() -> Outcome {
    let (lin, _, exact) = repetition10();
    let words = 20_000;
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let t = run_protocol(&lin, words, 300_000, &mut rng, &Budget::default())
        .map_err(|e| e.to_string())?;
    if t.words() != words {
        return Err(format!("only {} words announced", t.words()));
    }
    t.validate().map_err(|e| e.to_string())?;
    let mut used = vec![false; t.alice_letters.len()];
    for p in t.announcements.iter().flatten() {
        if std::mem::replace(&mut used[*p], true) {
            return Err(format!("position {p} reused"));
        }
    }
    let differ = t
        .alice_letters
        .iter()
        .zip(t.bob_letters.iter())
        .all(|(a, b)| a != b);
    let rate = t.word_error_rate();
    let sigma = (exact * (1.0 - exact) / words as f64).sqrt();
    let z = (rate - exact) / sigma;
    let eff = anticode::sim::efficiency(&lin);
    check(
        differ && z.abs() <= 4.0 && (eff - 0.2).abs() < 1e-12,
        format!("word error rate={rate:.5} exact={exact:.5} z={z:.2}; efficiency={eff}"),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("channel quantities", Some(1.0), channel_quantities),
        ("table reproduction", Some(1.0), table_reproduction),
        ("example bounds", None, example_bounds),
        ("quasi-cyclic construction", Some(5.0), quasi_cyclic),
        ("cross-method exactness", None, cross_method),
        ("monte carlo consistency", Some(30.0), monte_carlo),
        ("geometry oracles", Some(10.0), geometry_oracles),
        ("sequential decoder first codeword", None, sequential_first),
        ("gv threshold and construction", None, gv),
        ("protocol end-to-end", None, protocol),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        match timed(*limit, *f) {
            Ok(d) => println!("PASS {:>2} {name}: {d}", i + 1),
            Err(d) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {d}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
