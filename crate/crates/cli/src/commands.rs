use std::result::Result;

use invseq::trees::count_trees_exhaustive;
use invseq::*;
use num_bigint::BigInt;

use crate::report::{Cell, RunReport};
use crate::{checks, guard, CliError, Command, SeriesKind};

pub fn dispatch(command: &Command, allow_long: bool) -> Result<RunReport, CliError> {
    match command {
        Command::Count { pattern, n, set, vector } => count(pattern, *n, set.as_deref(), *vector, allow_long),
        Command::Classify { length, nmax } => classify_cmd(*length, *nmax, allow_long),
        Command::Check { name, nmax } => check(name, *nmax, allow_long),
        Command::Bijection { seq, inverse } => bijection(seq, *inverse),
        Command::Trees {
            k,
            nmax,
            root_unbounded,
            exhaustive_max,
        } => trees(*k, *nmax, *root_unbounded, *exhaustive_max, allow_long),
        Command::Series { kind, k, order } => series(*kind, *k, *order),
        Command::OeisCompare { seq, bfile, offset, nmax } => oeis_compare(seq, bfile, *offset, *nmax, allow_long),
    }
}

fn positive(name: &str, v: usize) -> Result<(), CliError> {
    if v == 0 {
        Err(CliError::Usage(format!("--{name} must be at least 1")))
    } else {
        Ok(())
    }
}

fn count(p: &Pattern, n: Option<usize>, set: Option<&[u32]>, vector: bool, allow_long: bool) -> Result<RunReport, CliError> {
    if let Some(set) = set {
        let bounds = BoundSet::new(set.to_vec())?;
        guard::refuse(guard::set_nodes(set), allow_long)?;
        let mut r = RunReport::new(&["set", "pattern", "count"]);
        r.param("pattern", p);
        r.param("set", &bounds);
        r.row(vec![bounds.to_string().into(), p.into(), count_avoiders(&bounds, p).into()]);
        return Ok(r);
    }
    let n = n.expect("clap requires --n or --set");
    positive("n", n)?;
    guard::refuse(guard::interval_nodes(n), allow_long)?;
    let mut r = RunReport::new(&["n", "pattern", "count"]);
    r.param("pattern", p);
    r.param("n", n);
    let counts = count_vector(p, n).counts;
    let first = if vector { 1 } else { n };
    for m in first..=n {
        r.row(vec![m.into(), p.into(), (&counts[m - 1]).into()]);
    }
    Ok(r)
}

fn classify_cmd(length: usize, n_max: usize, allow_long: bool) -> Result<RunReport, CliError> {
    positive("length", length)?;
    positive("nmax", n_max)?;
    let patterns = canonical_patterns(length);
    guard::refuse(patterns.len() as f64 * guard::interval_nodes(n_max), allow_long)?;
    let mut r = RunReport::new(&["class", "size", "patterns", "counts"]);
    r.param("length", length);
    r.param("nmax", n_max);
    let classes = wilf::classify_patterns(&patterns, n_max);
    for (i, c) in classes.iter().enumerate() {
        r.row(vec![(i + 1).into(), c.patterns.len().into(), Cell::list(&c.patterns), Cell::list(&c.counts)]);
    }
    r.param("classes", classes.len());
    Ok(r)
}

fn check(name: &str, n: Option<usize>, allow_long: bool) -> Result<RunReport, CliError> {
    if name == "list" {
        let mut r = RunReport::new(&["check", "default", "about"]);
        for c in checks::CHECKS {
            r.row(vec![c.name.into(), c.default_n.into(), c.about.into()]);
        }
        return Ok(r);
    }
    let spec = checks::find(name).ok_or_else(|| {
        CliError::Usage(format!("unknown check {name:?}; available: {}", checks::names().join(", ")))
    })?;
    let n = n.unwrap_or(spec.default_n);
    positive("nmax", n)?;
    guard::refuse(spec.estimated_nodes(n), allow_long)?;
    let mut r = RunReport::new(&checks::COLUMNS);
    r.param("check", name);
    r.param("nmax", n);
    spec.run(&mut r, n)?;
    Ok(r)
}

/// Reads `0,1,2,3` or `0123`.
fn parse_sequence(text: &str) -> Result<Vec<u32>, CliError> {
    let tokens: Vec<&str> = if text.contains(',') {
        text.split(',').map(str::trim).collect()
    } else {
        text.trim().split("").filter(|t| !t.is_empty()).collect()
    };
    tokens
        .iter()
        .enumerate()
        .map(|(i, t)| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("bad sequence entry {t:?} at position {}", i + 1)))
        })
        .collect()
}

fn bijection(seq: &str, inverse: bool) -> Result<RunReport, CliError> {
    let e = SInvSeq::inversion(parse_sequence(seq)?)?.into_entries();
    let f = if inverse { map_3201_to_3210(&e)? } else { map_3210_to_3201(&e)? };
    let layers = maxima_layers(&e);
    let mut r = RunReport::new(&["position", "layer", "input", "output"]);
    r.param("direction", if inverse { "3201 -> 3210" } else { "3210 -> 3201" });
    r.param("input", format!("{e:?}"));
    r.param("output", format!("{f:?}"));
    for i in 0..e.len() {
        let layer = if layers.first.contains(&i) {
            "x"
        } else if layers.second.contains(&i) {
            "y"
        } else {
            "z"
        };
        r.row(vec![(i + 1).into(), layer.into(), e[i].into(), f[i].into()]);
    }
    let (avoided, back) = if inverse {
        ("3210", map_3210_to_3201(&f)?)
    } else {
        ("3201", map_3201_to_3210(&f)?)
    };
    r.check(format!("output avoids {avoided}"), !contains(&f, &avoided.parse()?), "");
    r.check("round trip", back == e, "");
    Ok(r)
}

fn trees(k: usize, n_max: usize, root_unbounded: bool, exhaustive_max: usize, allow_long: bool) -> Result<RunReport, CliError> {
    positive("k", k)?;
    guard::refuse(guard::interval_nodes(exhaustive_max.min(n_max)), allow_long)?;
    let mut r = RunReport::new(&["n", "k", "count", "exhaustive"]);
    r.param("k", k);
    r.param("root", if root_unbounded { "unbounded" } else { "bounded" });
    let mut agree = true;
    for n in 0..=n_max {
        let count = if root_unbounded {
            if n == 0 {
                continue;
            }
            count_trees_root_unbounded(n, k)?
        } else {
            count_trees_bounded(n, k)
        };
        let exhaustive = (n <= exhaustive_max).then(|| count_trees_exhaustive(n, k, root_unbounded));
        if let Some(x) = exhaustive {
            agree &= count == x.into();
        }
        r.row(vec![n.into(), k.into(), count.into(), exhaustive.map_or(Cell::from(""), Cell::from)]);
    }
    r.check("series agrees with brute force", agree, format!("n <= {}", exhaustive_max.min(n_max)));
    Ok(r)
}

fn series(kind: SeriesKind, k: usize, order: usize) -> Result<RunReport, CliError> {
    positive("k", k)?;
    if kind == SeriesKind::C {
        let coeffs = c_coefficients(k)?;
        let mut r = RunReport::new(&["m", "k", "c"]);
        for (m, c) in coeffs.iter().enumerate() {
            r.row(vec![m.into(), k.into(), c.into()]);
        }
        r.check("polynomial identity", invseq::trees::c_identity_holds(k)?, "");
        return Ok(r);
    }
    let s = match kind {
        SeriesKind::T => series_tk(k, order),
        _ => series_rk(k, order),
    };
    let mut r = RunReport::new(&["n", "coefficient", "egf_count"]);
    r.param("series", format!("{}_{k}", if kind == SeriesKind::T { "T" } else { "R" }));
    r.param("order", order);
    let mut integral = true;
    for (n, c) in s.coeffs().iter().enumerate() {
        let scaled = s.egf_integer(n);
        integral &= scaled.is_some();
        r.row(vec![n.into(), c.into(), scaled.map_or(Cell::from(""), Cell::from)]);
    }
    r.check("n! [x^n] integral", integral, "");
    Ok(r)
}

/// The computed side of `oeis-compare`: terms and the `n` of the first one.
fn computed_sequence(seq: &str, n_max: usize, allow_long: bool) -> Result<(Vec<BigInt>, i64), CliError> {
    let bad = || CliError::Usage(format!("unknown --seq {seq:?}; expected inv-<pattern>, trees-<k> or rtrees-<k>"));
    let (kind, arg) = seq.split_once('-').ok_or_else(bad)?;
    match kind {
        "inv" => {
            let p: Pattern = arg.parse()?;
            guard::refuse(guard::interval_nodes(n_max), allow_long)?;
            let counts = count_vector(&p, n_max).counts;
            Ok((counts.into_iter().map(BigInt::from).collect(), 1))
        }
        "trees" | "rtrees" => {
            let k: usize = arg.parse().map_err(|_| bad())?;
            let s = if kind == "trees" { series_tk(k, n_max) } else { series_rk(k, n_max) };
            Ok((s.egf_counts()?, 0))
        }
        _ => Err(bad()),
    }
}

fn oeis_compare(seq: &str, path: &std::path::Path, offset: Option<i64>, n_max: usize, allow_long: bool) -> Result<RunReport, CliError> {
    let bfile = BFile::read(path)?;
    let (terms, start) = computed_sequence(seq, n_max, allow_long)?;
    let offset = offset.unwrap_or(start);
    let mut r = RunReport::new(&["index", "n", "expected", "computed", "verdict"]);
    r.param("seq", seq);
    r.param("bfile", path.display());
    r.param("offset", offset);
    for (m, value) in terms.iter().enumerate() {
        let index = m as i64 + offset;
        if let Some(expected) = bfile.get(index) {
            let verdict = if expected == value { "PASS" } else { "FAIL" };
            r.row(vec![index.into(), (m as i64 + start).into(), expected.into(), value.into(), verdict.into()]);
        }
    }
    match bfile.compare(&terms, offset) {
        Comparison::Match { first_index, length } => {
            r.check("b-file match", true, format!("{length} terms from index {first_index}"))
        }
        Comparison::Mismatch {
            index,
            expected,
            computed,
            matched_before,
        } => r.check(
            "b-file match",
            false,
            format!("mismatch at index {index}: b-file {expected}, computed {computed} ({matched_before} terms matched before)"),
        ),
        Comparison::NoOverlap => r.check("b-file match", false, "no overlap between computed terms and b-file indices"),
    }
    Ok(r)
}
