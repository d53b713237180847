use crate::output::{sig4, Output};
use crate::{Cli, CodeArgs, Command, MethodArg, Reproduce};
use anticode::analysis::{
    average_from_union, bound_report, coset_alpha, distance_distribution, exact_error_ml,
    exact_error_sequential, format_exact, gv_threshold, union_measure,
};
use anticode::channel::info_quantities;
use anticode::codes::{
    catalog, gv_random_code, lookup, parse_code_file, write_code_file, GvOptions, Source,
};
use anticode::decode::{consistent_indices, decode};
use anticode::report::{reproduce_example1, reproduce_table1};
use anticode::sim::{estimate_error, write_transcript, MonteCarloConfig, Protocol};
use anticode::{Budget, Codebook, DecoderKind, LinearCode, Scalar, Word};
use anyhow::{anyhow, bail, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::Path;
use std::time::Instant;

/// Provenance of a command's output files.
struct RunManifest {
    subcommand: &'static str,
    seed: u64,
    started: Instant,
}

impl RunManifest {
    fn new(subcommand: &'static str, seed: u64) -> Self {
        Self {
            subcommand,
            seed,
            started: Instant::now(),
        }
    }

    /// Fields that depend only on the invocation.
    fn fields(&self) -> Vec<(String, String)> {
        let args: Vec<String> = std::env::args().skip(1).collect();
        vec![
            (
                "tool".into(),
                format!("anticode {}", env!("CARGO_PKG_VERSION")),
            ),
            ("subcommand".into(), self.subcommand.into()),
            ("args".into(), args.join(" ")),
            ("seed".into(), self.seed.to_string()),
        ]
    }

    /// Writes `FILE.manifest` next to an output file, with the run duration.
    fn write_sidecar(&self, file: &Path) -> Result<()> {
        let mut text = String::new();
        for (k, v) in self.fields() {
            text.push_str(&format!("{k}={v}\n"));
        }
        text.push_str(&format!("output={}\n", file.display()));
        text.push_str(&format!(
            "duration_s={:.3}\n",
            self.started.elapsed().as_secs_f64()
        ));
        let mut path = file.as_os_str().to_owned();
        path.push(".manifest");
        std::fs::write(&path, text)
            .with_context(|| format!("writing {}", Path::new(&path).display()))
    }
}

enum Loaded {
    Linear(LinearCode),
    Explicit(Codebook),
}

impl Loaded {
    fn codebook(&self, budget: &Budget) -> Result<Codebook> {
        Ok(match self {
            Loaded::Linear(c) => c.codebook(budget)?,
            Loaded::Explicit(b) => b.clone(),
        })
    }

    fn linear(self) -> Result<LinearCode> {
        match self {
            Loaded::Linear(c) => Ok(c),
            Loaded::Explicit(_) => bail!("this command needs a linear code (--code or --name)"),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn catalog_code(name: &str) -> Result<LinearCode> {
    let entry = lookup(name).ok_or_else(|| anyhow!("no catalog entry {name:?}"))?;
    match entry.code() {
        Some(code) => Ok(code?),
        None => bail!(
            "catalog entry {} has parameters only; use --params {},{},{}",
            entry.name,
            entry.n,
            entry.k,
            entry.d
        ),
    }
}

fn load(args: &CodeArgs) -> Result<Loaded> {
    if let Some(path) = &args.code {
        let code =
            parse_code_file(&read(path)?).with_context(|| format!("in {}", path.display()))?;
        Ok(Loaded::Linear(code))
    } else if let Some(name) = &args.name {
        Ok(Loaded::Linear(catalog_code(name)?))
    } else if let Some(path) = &args.codebook {
        let book =
            Codebook::parse(&read(path)?).with_context(|| format!("in {}", path.display()))?;
        Ok(Loaded::Explicit(book))
    } else {
        bail!("give a code with --code FILE, --name NAME or --codebook FILE")
    }
}

pub fn run(cli: &Cli) -> Result<()> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring worker threads")?;
    }
    let budget = cli.budget.map_or_else(Budget::default, Budget::uniform);
    let mut out = Output::new(cli.format);
    match &cli.command {
        Command::Info => info(&mut out),
        Command::Weights(args) => weights(&mut out, load(args)?.linear()?, &budget)?,
        Command::Mindist(args) => mindist(&mut out, load(args)?, &budget)?,
        Command::Catalog { name } => list_catalog(&mut out, name.as_deref())?,
        Command::Gv {
            n,
            d,
            seed,
            out: file,
            max_attempts,
        } => gv(
            &mut out,
            *n,
            *d,
            *seed,
            file.as_deref(),
            *max_attempts,
            &budget,
        )?,
        Command::GvThreshold => {
            let (beta, rate): (f64, f64) = gv_threshold();
            out.kv("beta", beta);
            out.kv("rate", rate);
            out.line(format!("beta  {beta:.6}\nrate  {rate:.6}"));
        }
        Command::Bounds {
            code,
            params,
            weights_from_catalog,
        } => bounds(
            &mut out,
            code,
            params.as_deref(),
            weights_from_catalog.as_deref(),
            &budget,
        )?,
        Command::Analyze {
            code,
            method,
            decoder,
        } => analyze(&mut out, load(code)?, *method, (*decoder).into(), &budget)?,
        Command::Decode {
            code,
            word,
            decoder,
            seed,
        } => decode_word(
            &mut out,
            load(code)?,
            word,
            (*decoder).into(),
            *seed,
            &budget,
        )?,
        Command::Simulate {
            code,
            trials,
            decoder,
            seed,
        } => simulate(
            &mut out,
            load(code)?,
            *trials,
            (*decoder).into(),
            *seed,
            &budget,
        )?,
        Command::Protocol {
            code,
            words,
            letters,
            seed,
            transcript,
        } => protocol(
            &mut out,
            load(code)?.linear()?,
            *words,
            *letters,
            *seed,
            transcript.as_deref(),
            &budget,
        )?,
        Command::Reproduce { which } => match which {
            Reproduce::Table1 => table1(&mut out),
            Reproduce::Example1 => example1(&mut out, &budget)?,
        },
    }
    out.flush()?;
    Ok(())
}

fn info(out: &mut Output) {
    let q = info_quantities();
    let rows = [
        ("h_y_bits", "H(Y)", q.h_y),
        ("h_y_given_x_bits", "H(Y|X)", q.h_y_given_x),
        ("mutual_info_bits", "I(X;Y)", q.mutual_info),
        ("capacity_bits", "capacity", q.capacity),
    ];
    for (key, _, v) in rows {
        out.kv(key, v);
    }
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|(_, label, v)| vec![label.to_string(), format!("{v:.6}")])
        .collect();
    out.table(&["quantity", "bits"], &table);
}

fn code_header(out: &mut Output, code: &LinearCode) {
    out.kv("n", code.n());
    out.kv("k", code.k());
    out.kv("codewords", code.size());
}

fn weights(out: &mut Output, code: LinearCode, budget: &Budget) -> Result<()> {
    let w = code.weight_distribution(budget)?;
    code_header(out, &code);
    out.kv("min_distance", w.min_distance().unwrap_or(0));
    let rows: Vec<Vec<String>> = w
        .nonzero()
        .map(|(s, a)| vec![s.to_string(), a.to_string()])
        .collect();
    for (s, a) in w.nonzero() {
        out.record(&[("weight", s.to_string()), ("count", a.to_string())]);
    }
    out.line(format!(
        "[{},{}] code, {} codewords",
        code.n(),
        code.k(),
        code.size()
    ));
    out.table(&["weight", "count"], &rows);
    Ok(())
}

fn mindist(out: &mut Output, code: Loaded, budget: &Budget) -> Result<()> {
    let (n, size, d) = match &code {
        Loaded::Linear(c) => {
            code_header(out, c);
            (c.n(), c.size(), c.minimum_distance(budget)?)
        }
        Loaded::Explicit(b) => {
            let dd = distance_distribution(b, budget)?;
            let d = dd
                .pairs
                .iter()
                .enumerate()
                .skip(1)
                .find(|(_, &p)| p > 0)
                .map_or(0, |(s, _)| s);
            out.kv("n", b.n());
            out.kv("codewords", b.len());
            (b.n(), b.len() as u128, d)
        }
    };
    out.kv("min_distance", d);
    out.line(format!("n={n} codewords={size} minimum distance {d}"));
    Ok(())
}

fn list_catalog(out: &mut Output, name: Option<&str>) -> Result<()> {
    let entries = match name {
        Some(n) => vec![lookup(n).ok_or_else(|| anyhow!("no catalog entry {n:?}"))?],
        None => catalog(),
    };
    let mut rows = Vec::new();
    for e in &entries {
        let source = match e.source {
            Source::Table { row } => format!("table-row-{}", row + 1),
            Source::Example { item } => format!("example-{item}"),
        };
        let generator = if e.has_generator() { "yes" } else { "no" };
        out.record(&[
            ("name", e.name.clone()),
            ("n", e.n.to_string()),
            ("k", e.k.to_string()),
            ("d", e.d.to_string()),
            ("m", e.size().to_string()),
            ("rate", e.efficiency().to_string()),
            ("source", source.clone()),
            ("generator", generator.into()),
            ("bound", e.published_bound.to_string()),
        ]);
        rows.push(vec![
            e.name.clone(),
            format!("{:.4}", e.efficiency()),
            sig4(e.published_bound),
            source,
            generator.into(),
        ]);
    }
    out.table(&["code", "rate", "bound", "source", "generator"], &rows);
    Ok(())
}

fn gv(
    out: &mut Output,
    n: usize,
    d: usize,
    seed: u64,
    file: Option<&Path>,
    max_attempts: usize,
    budget: &Budget,
) -> Result<()> {
    let manifest = RunManifest::new("gv", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = GvOptions {
        max_attempts,
        budget: *budget,
    };
    let code = gv_random_code(n, d, &mut rng, &opts)?;
    let found = code.minimum_distance(budget)?;
    let mut text = String::new();
    for (k, v) in manifest.fields() {
        text.push_str(&format!("# {k}={v}\n"));
    }
    text.push_str(&write_code_file(&code));
    code_header(out, &code);
    out.kv("d", d);
    out.kv("min_distance", found);
    out.kv("seed", seed);
    match file {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            manifest.write_sidecar(path)?;
            out.kv("out", path.display());
            out.line(format!(
                "[{n},{},{found}] code written to {}",
                code.k(),
                path.display()
            ));
        }
        None => out.line(text.trim_end()),
    }
    Ok(())
}

fn parse_params(s: &str) -> Result<(usize, usize, usize)> {
    let v: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| anyhow!("--params expects n,k,d, got {s:?}"))?;
    match v[..] {
        [n, k, d] if k >= 1 && k <= n && d >= 1 && d <= n => Ok((n, k, d)),
        _ => bail!("--params expects n,k,d with 1 <= k <= n and 1 <= d <= n, got {s:?}"),
    }
}

fn bounds(
    out: &mut Output,
    args: &CodeArgs,
    params: Option<&str>,
    weights_from: Option<&str>,
    budget: &Budget,
) -> Result<()> {
    let catalog_weights = match weights_from {
        Some(name) => {
            let e = lookup(name).ok_or_else(|| anyhow!("no catalog entry {name:?}"))?;
            Some(
                e.weight_distribution()
                    .ok_or_else(|| anyhow!("{} has no stored weight distribution", e.name))?,
            )
        }
        None => None,
    };
    let (n, m, d, theorem1): (usize, u128, usize, Option<f64>) = match params {
        Some(p) => {
            let (n, k, d) = parse_params(p)?;
            let m = anticode::codes::code_size(k).ok_or_else(|| anyhow!("k = {k} is too large"))?;
            (n, m, d, None)
        }
        None => match load(args)? {
            Loaded::Linear(code) => {
                let w = code.weight_distribution(budget)?;
                let t1 = anticode::bound_theorem1::<f64>(w);
                (
                    code.n(),
                    code.size(),
                    w.min_distance().unwrap_or(0),
                    Some(t1),
                )
            }
            Loaded::Explicit(book) => {
                let dd = distance_distribution(&book, budget)?;
                let d = dd
                    .pairs
                    .iter()
                    .enumerate()
                    .skip(1)
                    .find(|(_, &p)| p > 0)
                    .map_or(0, |(s, _)| s);
                (book.n(), book.len() as u128, d, Some(dd.bound_theorem1()))
            }
        },
    };
    let r = bound_report::<f64>(m, d, catalog_weights.as_ref())?;
    let theorem1 = r.theorem1.or(theorem1);
    out.kv("n", n);
    out.kv("m", m);
    out.kv("d", d);
    let mut rows = Vec::new();
    if let Some(t) = theorem1 {
        out.kv("theorem1", t);
        rows.push(vec!["average, weight distribution".into(), sig4(t)]);
    }
    for (key, label, v) in [
        (
            "theorem2_tight",
            "average, (M-1)/2 (2/3)^d",
            r.theorem2_tight,
        ),
        ("theorem2_loose", "average, M/2 (2/3)^d", r.theorem2_loose),
        ("theorem3_tight", "maximum, (M-1) (2/3)^d", r.theorem3_tight),
        ("theorem3_loose", "maximum, M (2/3)^d", r.theorem3_loose),
    ] {
        out.kv(key, v);
        rows.push(vec![label.into(), sig4(v)]);
    }
    out.table(&["bound", "value"], &rows);
    Ok(())
}

fn analyze(
    out: &mut Output,
    code: Loaded,
    method: MethodArg,
    decoder: DecoderKind,
    budget: &Budget,
) -> Result<()> {
    let book = code.codebook(budget)?;
    let n = book.n();
    out.kv("n", n);
    out.kv("m", book.len());
    let report = match method {
        MethodArg::Exact => {
            let r = match decoder {
                DecoderKind::Ml => exact_error_ml(&book, budget)?,
                DecoderKind::Sequential => exact_error_sequential(&book, budget)?,
            };
            out.kv("decoder", decoder);
            r
        }
        MethodArg::Coset => {
            let c = coset_alpha(&code.linear()?, budget)?;
            out.kv("alpha", c.alpha);
            c.report(n)
        }
        MethodArg::Union => {
            let u = union_measure(&book, budget)?;
            out.kv("union", u);
            let avg = average_from_union(n, book.len(), u)?;
            anticode::ErrorReport {
                n,
                per_codeword: Vec::new(),
                maximum: avg.clone(),
                average: avg,
                method: anticode::Method::ExactEnumeration,
                monte_carlo: None,
            }
        }
    };
    out.kv("method", report.method);
    out.kv("average", report.average.to_f64());
    out.kv("average_exact", format_exact(&report.average, n));
    let max_known = method != MethodArg::Union;
    if max_known {
        out.kv("maximum", report.maximum.to_f64());
        out.kv("maximum_exact", format_exact(&report.maximum, n));
    }
    let mut rows = Vec::new();
    for (i, e) in report.per_codeword.iter().enumerate() {
        out.record(&[
            ("i", i.to_string()),
            ("e", e.to_f64().to_string()),
            ("e_exact", format_exact(e, n)),
        ]);
        rows.push(vec![
            i.to_string(),
            book.get(i).to_string(),
            format_exact(e, n),
            format!("{:.6e}", e.to_f64()),
        ]);
    }
    out.line(format!(
        "method {}: average error {} = {:.6e}",
        report.method,
        format_exact(&report.average, n),
        report.average.to_f64()
    ));
    if max_known {
        out.line(format!(
            "maximum error {} = {:.6e}",
            format_exact(&report.maximum, n),
            report.maximum.to_f64()
        ));
    }
    if !rows.is_empty() {
        out.table(&["i", "codeword", "e_i", "decimal"], &rows);
    }
    Ok(())
}

fn decode_word(
    out: &mut Output,
    code: Loaded,
    word: &str,
    decoder: DecoderKind,
    seed: u64,
    budget: &Budget,
) -> Result<()> {
    let book = code.codebook(budget)?;
    let y: Word = word
        .parse()
        .with_context(|| format!("received word {word:?}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outcome = decode(decoder, &y, &book, &mut rng)?;
    let consistent = consistent_indices(&y, &book)?;
    let list: Vec<String> = consistent.iter().map(usize::to_string).collect();
    match outcome.index() {
        Some(i) => {
            out.kv("result", "codeword");
            out.kv("index", i);
            out.kv("codeword", book.get(i));
            out.line(format!("{y} -> codeword {i} ({})", book.get(i)));
        }
        None => {
            out.kv("result", "inconsistent");
            out.line(format!("{y} is consistent with no codeword"));
        }
    }
    out.kv("tie_count", outcome.tie_count);
    out.kv("consistent", list.join(","));
    out.line(format!("consistent codewords: [{}]", list.join(", ")));
    Ok(())
}

fn simulate(
    out: &mut Output,
    code: Loaded,
    trials: u64,
    decoder: DecoderKind,
    seed: u64,
    budget: &Budget,
) -> Result<()> {
    let book = code.codebook(budget)?;
    let r = estimate_error(&book, &MonteCarloConfig::new(trials, seed, decoder))?;
    let s = r.monte_carlo.expect("simulated report");
    out.kv("decoder", decoder);
    out.kv("seed", seed);
    out.kv("trials", s.trials);
    out.kv("errors", s.errors);
    out.kv("average", r.average);
    out.kv("std_error", s.std_error);
    out.kv("half_width_4sigma", s.half_width(4.0));
    if !r.per_codeword.is_empty() {
        out.kv("maximum", r.maximum);
    }
    out.line(format!(
        "{} trials, {} errors: average error {:.6e} +/- {:.2e} (4 sigma)",
        s.trials,
        s.errors,
        r.average,
        s.half_width(4.0)
    ));
    Ok(())
}

fn protocol(
    out: &mut Output,
    code: LinearCode,
    words: usize,
    letters: usize,
    seed: u64,
    transcript: Option<&Path>,
    budget: &Budget,
) -> Result<()> {
    let manifest = RunManifest::new("protocol", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = Protocol::new(&code, budget)?.run(words, letters, &mut rng)?;
    out.kv("words", t.words());
    out.kv("word_errors", t.word_errors());
    out.kv("word_error_rate", t.word_error_rate());
    out.kv("key_bits", t.key_bits_alice.len());
    out.kv("key_bit_errors", t.key_bit_errors());
    out.kv("letters", letters);
    out.kv("letters_consumed", t.letters_consumed);
    out.kv("efficiency", anticode::sim::efficiency(&code));
    out.kv("realized_efficiency", t.realized_efficiency());
    out.kv("seed", seed);
    out.line(format!(
        "{} of {words} words announced using {} of {letters} letters; {} word errors; {} key bits",
        t.words(),
        t.letters_consumed,
        t.word_errors(),
        t.key_bits_alice.len()
    ));
    if let Some(path) = transcript {
        std::fs::write(path, write_transcript(&t, &manifest.fields()))
            .with_context(|| format!("writing {}", path.display()))?;
        manifest.write_sidecar(path)?;
        out.kv("transcript", path.display());
    }
    Ok(())
}

fn table1(out: &mut Output) {
    let rows = reproduce_table1();
    let mut text = Vec::new();
    for r in &rows {
        out.record(&[
            ("name", r.name.clone()),
            ("n", r.n.to_string()),
            ("k", r.k.to_string()),
            ("d", r.d.to_string()),
            ("m", r.m.to_string()),
            ("rate", r.rate.to_string()),
            ("tight", r.tight.to_string()),
            ("loose", r.loose.to_string()),
            ("published", r.published.to_string()),
            ("flag", r.flag.to_string()),
        ]);
        text.push(vec![
            r.n.to_string(),
            r.k.to_string(),
            r.d.to_string(),
            r.m.to_string(),
            format!("{:.4}", r.rate),
            sig4(r.tight),
            sig4(r.loose),
            sig4(r.published),
            r.flag.to_string(),
        ]);
    }
    out.table(
        &[
            "n",
            "k",
            "d",
            "M",
            "R",
            "(M-1)/2(2/3)^d",
            "M/2(2/3)^d",
            "published",
            "match",
        ],
        &text,
    );
    let tight: Vec<&str> = rows
        .iter()
        .filter(|r| r.flag == anticode::report::MatchFlag::Tight)
        .map(|r| r.name.as_str())
        .collect();
    let none: Vec<&str> = rows
        .iter()
        .filter(|r| !r.flag.matched())
        .map(|r| r.name.as_str())
        .collect();
    out.line(format!(
        "matched by the tight form only: {tight:?}; by neither form: {none:?}"
    ));
}

fn example1(out: &mut Output, budget: &Budget) -> Result<()> {
    let items = reproduce_example1(budget)?;
    let mut text = Vec::new();
    let yes_no = |b: bool| if b { "match" } else { "mismatch" }.to_string();
    for it in &items {
        let b = &it.bounds;
        let mut fields = vec![
            ("item", it.item.to_string()),
            ("name", b.name.clone()),
            ("rate", b.rate.to_string()),
            ("loose", b.loose.to_string()),
            ("published_loose", b.published.to_string()),
            ("loose_flag", yes_no(b.flag.matched())),
        ];
        if let Some(t) = it.theorem1 {
            fields.push(("theorem1", t.to_string()));
        }
        if let Some(p) = it.published_theorem1 {
            fields.push(("published_theorem1", p.to_string()));
        }
        if let Some(m) = it.theorem1_matches() {
            fields.push(("theorem1_flag", yes_no(m)));
        }
        let mut verified = String::from("-");
        if let Some(v) = &it.verification {
            let weights: Vec<String> = v
                .weights
                .nonzero()
                .map(|(s, a)| format!("{s}:{a}"))
                .collect();
            let ok = v.confirms(b.n, b.k, b.d);
            fields.extend([
                ("verified", if ok { "yes" } else { "no" }.to_string()),
                ("built_n", v.n.to_string()),
                ("built_k", v.k.to_string()),
                ("codewords", v.codewords.to_string()),
                ("min_distance", v.min_distance.to_string()),
                ("weights", weights.join(",")),
            ]);
            verified = format!(
                "[{},{},{}] {}",
                v.n,
                v.k,
                v.min_distance,
                if ok { "ok" } else { "FAILED" }
            );
        }
        out.record(&fields);
        text.push(vec![
            it.item.to_string(),
            b.name.clone(),
            format!("{:.4}", b.rate),
            sig4(b.loose),
            sig4(b.published),
            it.theorem1.map_or("-".into(), sig4),
            it.published_theorem1.map_or("-".into(), sig4),
            it.theorem1_matches().map_or("-".into(), yes_no),
            verified,
        ]);
    }
    out.table(
        &[
            "item",
            "code",
            "R",
            "M/2(2/3)^d",
            "published",
            "weights bound",
            "published",
            "match",
            "built",
        ],
        &text,
    );
    Ok(())
}
