use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use symideal::classification::{
    random_parameters, relation_f, relation_g, row6_relation, row7a_relation, table1_rows, two_equal_ideal, RowIdeal,
};
use symideal::combinat::{kostka_decomposition, partitions_of, standard_tableaux, IsotypicDecomposition, Partition, Tableau};
use symideal::equivariant::{
    decompose_quotient, decompose_span, is_permutation_module_sum, is_symmetric, tangent_dimension, tangent_dimension_with,
    SyzygyMethod, TangentOptions,
};
use symideal::ideals::{orbit_ideal, Ideal, IdealJson};
use symideal::poly::{int, power_sum, Coeff, Polynomial};
use symideal::specht::{coinvariant_isotypic_basis, specht_polynomial, vandermonde};
use symideal::tanisaki::{inclusion_chain_check, orbit_point, tanisaki_ideal, TanisakiMode};

use crate::report::{parallel_map, Report};
use crate::{Cli, Command, IdealSource, Method};

/// Largest `n` accepted by the ideal-theoretic verbs.
const MAX_N: usize = 6;
/// Higher Specht bases with more elements than this are counted, not listed.
const MAX_HIGHER_SPECHT: usize = 576;
/// Polynomial lists longer than this are elided in text output.
const TEXT_LIST_LIMIT: usize = 24;

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Specht { lambda, tableau } => specht(cli.n, lambda.as_deref(), tableau.as_deref()),
        Command::Tanisaki { lambda, mode } => tanisaki(cli.n, lambda, *mode),
        Command::Table1 => table1(required_n(cli, 3, 5)?, cli.seed, cli.jobs),
        Command::Lemmas => lemmas(required_n(cli, 3, 5)?, cli.jobs),
        Command::Tangent { source, method, extra_degrees, full, expect } => {
            let method = match method {
                Method::ModISquared => SyzygyMethod::ModISquared,
                Method::Degreewise => SyzygyMethod::Degreewise { extra_degrees: *extra_degrees },
            };
            tangent(&resolve_ideal(cli.n, source)?, TangentOptions { equivariant: !full, method }, *expect)
        }
        Command::Decompose { source } => decompose(&resolve_ideal(cli.n, source)?),
        Command::Gr { source, point, lambda } => gr(cli.n, source, point.as_deref(), lambda.as_deref()),
    }
}

fn required_n(cli: &Cli, lo: usize, hi: usize) -> Result<usize> {
    let n = cli.n.context("--n is required")?;
    if !(lo..=hi).contains(&n) {
        bail!("--n must satisfy {lo} <= n <= {hi}, got {n}");
    }
    Ok(n)
}

fn check_n(given: Option<usize>, actual: usize) -> Result<()> {
    match given {
        Some(n) if n != actual => bail!("--n {n} does not match the input, which has n = {actual}"),
        _ => Ok(()),
    }
}

fn guard(n: usize) -> Result<()> {
    if !(2..=MAX_N).contains(&n) {
        bail!("n must satisfy 2 <= n <= {MAX_N} for this command, got {n}");
    }
    Ok(())
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse().with_context(|| format!("invalid partition {s:?}: parts must be positive and weakly decreasing"))
}

fn parse_rational(s: &str) -> Result<Coeff> {
    s.trim().parse().map_err(|e| anyhow!("invalid rational {s:?}: {e}"))
}

fn strings(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(ToString::to_string).collect()
}

fn list_lines(report: &mut Report, title: &str, polys: &[Polynomial]) {
    report.line(format!("{title} ({}):", polys.len()));
    for p in polys.iter().take(TEXT_LIST_LIMIT) {
        report.line(format!("  {p}"));
    }
    if polys.len() > TEXT_LIST_LIMIT {
        report.line(format!("  ... {} more", polys.len() - TEXT_LIST_LIMIT));
    }
}

fn irreducible(lambda: &Partition, m: usize) -> IsotypicDecomposition {
    let mut d = IsotypicDecomposition::new(lambda.size());
    d.add(lambda, m);
    d
}

fn specht(n: Option<usize>, lambda: Option<&str>, tableau: Option<&str>) -> Result<Report> {
    let mut r = Report::new();
    if let Some(t) = tableau {
        let t: Tableau = t.parse().with_context(|| format!("invalid tableau {t:?}: entries must be 1..n, each once"))?;
        let shape = t.shape();
        if let Some(l) = lambda {
            let l = parse_partition(l)?;
            if l != shape {
                bail!("tableau has shape {shape}, not {l}");
            }
        }
        check_n(n, t.size())?;
        let f = specht_polynomial(&t);
        let factors: Vec<String> = t
            .columns()
            .iter()
            .flat_map(|c| (0..c.len()).flat_map(move |j| (j + 1..c.len()).map(move |k| format!("(x{}-x{})", c[j], c[k]))))
            .collect();
        let factored = if factors.is_empty() { "1".to_string() } else { factors.concat() };
        r.set("n", t.size());
        r.set("lambda", shape.to_string());
        r.set("tableau", t.to_string());
        r.set("degree", shape.d_min());
        r.set("factored", factored.clone());
        r.set("specht_polynomial", f.to_string());
        r.line(format!("tableau {t} of shape {shape}, n = {}", t.size()));
        r.line(format!("column product: {factored}"));
        r.line(format!("specht polynomial (degree {}): {f}", shape.d_min()));
        r.check("degree", f.degree() == Some(shape.d_min() as u32) && f.is_homogeneous());
        return Ok(r);
    }
    let lambda = parse_partition(lambda.context("--lambda or --tableau is required")?)?;
    check_n(n, lambda.size())?;
    let n = lambda.size();
    let tabs = standard_tableaux(&lambda);
    let spechts: Vec<Polynomial> = tabs.iter().map(specht_polynomial).collect();
    let f = tabs.len();
    r.set("n", n);
    r.set("lambda", lambda.to_string());
    r.set("d", lambda.d_min());
    r.set("dimension", lambda.hook_length_dim().to_string());
    r.set("standard_tableaux", tabs.iter().map(ToString::to_string).collect::<Vec<_>>());
    r.set("specht_polynomials", strings(&spechts));
    r.line(format!("lambda = {lambda}, n = {n}, d = {}, dim S = {}", lambda.d_min(), lambda.hook_length_dim()));
    list_lines(&mut r, "specht polynomials", &spechts);
    r.check("specht count", f.to_string() == lambda.hook_length_dim().to_string());
    if n <= 7 {
        r.check("specht module", decompose_span(n, &spechts)? == irreducible(&lambda, 1));
    }
    r.set("higher_specht_count", f * f);
    if f * f <= MAX_HIGHER_SPECHT {
        let higher = coinvariant_isotypic_basis(&lambda);
        r.set("higher_specht_basis", strings(&higher));
        list_lines(&mut r, "higher specht basis", &higher);
        r.check("higher specht count", higher.len() == f * f);
        if n <= 7 {
            r.check("higher specht module", decompose_span(n, &higher)? == irreducible(&lambda, f));
        }
    } else {
        r.line(format!("higher specht basis: {} elements (not listed)", f * f));
    }
    Ok(r)
}

fn tanisaki(n: Option<usize>, lambda: &str, mode: TanisakiMode) -> Result<Report> {
    let lambda = parse_partition(lambda)?;
    check_n(n, lambda.size())?;
    guard(lambda.size())?;
    let n = lambda.size();
    let ideal = tanisaki_ideal(&lambda, mode);
    let colength = ideal.colength().finite();
    let expected_colength = lambda.multinomial();
    let decomposition = decompose_quotient(&ideal)?.total;
    let expected = kostka_decomposition(&lambda);
    let modes_agree = TanisakiMode::ALL.iter().all(|&m| tanisaki_ideal(&lambda, m) == ideal);
    let coinvariant = Ideal::new(n, (1..=n as u32).map(|k| power_sum(k, n)).collect::<symideal::Result<_>>()?)?;
    let is_coinvariant = ideal == coinvariant;

    let mut r = Report::new();
    r.set("n", n);
    r.set("lambda", lambda.to_string());
    r.set("mode", mode.tag());
    r.set("ideal", serde_json::to_value(ideal.to_json(true))?);
    r.set("colength", colength);
    r.set("expected_colength", expected_colength.to_string());
    r.set("decomposition", decomposition.to_string());
    r.set("expected_decomposition", expected.to_string());
    r.set("permutation_module", is_permutation_module_sum(&decomposition).map(|v| strings_of(&v)));
    r.set("equals_power_sum_ideal", is_coinvariant);
    r.line(format!("lambda = {lambda}, n = {n}, mode = {mode}"));
    list_lines(&mut r, "generators", ideal.generators());
    list_lines(&mut r, "groebner basis", &ideal.groebner().polys);
    r.line(format!(
        "colength: {} (expected {expected_colength})",
        colength.map_or("infinite".into(), |c| c.to_string())
    ));
    r.line(format!("decomposition: {decomposition} (expected M{lambda} = {expected})"));
    if is_coinvariant {
        r.line(format!("equals the power sum ideal (p1, ..., p{n})"));
    }
    r.check("colength", colength.map(|c| c.to_string()) == Some(expected_colength.to_string()));
    r.check("decomposition", decomposition == expected);
    r.check("modes agree", modes_agree);
    r.check("symmetric", is_symmetric(&ideal));
    r.check("homogeneous", ideal.is_homogeneous());
    Ok(r)
}

fn strings_of(parts: &[Partition]) -> Vec<String> {
    parts.iter().map(ToString::to_string).collect()
}

fn row_name(row: &RowIdeal) -> String {
    let label = row.label();
    format!(
        "row {}{}{}",
        label.row,
        label.d.map_or(String::new(), |d| format!(" d={d}")),
        label.param.as_ref().map_or(String::new(), |p| format!(" {p}"))
    )
}

struct RowOutcome {
    ok: bool,
    record: Value,
    line: String,
}

fn evaluate_row(row: &RowIdeal, n: usize) -> RowOutcome {
    let label = row.label();
    let mut failures = Vec::new();
    let symmetric = is_symmetric(&row.ideal);
    let homogeneous = row.ideal.is_homogeneous();
    let colength = row.ideal.colength().finite();
    let decomposition = decompose_quotient(&row.ideal).map(|d| d.total);
    let tangent = tangent_dimension(&row.ideal).map(|t| t.tangent_dim);
    if !symmetric {
        failures.push("not symmetric".to_string());
    }
    if !homogeneous {
        failures.push("not homogeneous".to_string());
    }
    if colength != Some(row.colength()) || row.colength() > 2 * n {
        failures.push(format!("colength {colength:?}, expected {}", row.colength()));
    }
    match &decomposition {
        Ok(d) if *d == row.expected => {}
        Ok(d) => failures.push(format!("decomposition {d}, expected {}", row.expected)),
        Err(e) => failures.push(format!("decomposition failed: {e}")),
    }
    let observed = match tangent {
        Ok(t) if t == row.smoothable_dim => "smooth",
        Ok(t) if t > row.smoothable_dim => "singular",
        Ok(_) => "below smoothable dimension",
        Err(_) => "error",
    };
    let expected = if row.smooth { "smooth" } else { "singular" };
    if observed != expected {
        failures.push(format!("tangent {:?} gives {observed}, expected {expected}", tangent.as_ref().ok()));
    }
    let name = row_name(row);
    let ok = failures.is_empty();
    let line = format!(
        "{name}: colength {} [{}] tangent {} smoothable {} {observed} {}",
        row.colength(),
        decomposition.as_ref().map_or("?".into(), |d| d.to_string()),
        tangent.as_ref().map_or("?".into(), |t| t.to_string()),
        row.smoothable_dim,
        if ok { "PASS" } else { "FAIL" }
    );
    let record = json!({
        "row": label.row,
        "d": label.d,
        "param": label.param,
        "colength": colength,
        "expected_colength": row.colength(),
        "decomposition": decomposition.as_ref().ok().map(ToString::to_string),
        "expected_decomposition": row.expected.to_string(),
        "symmetric": symmetric,
        "homogeneous": homogeneous,
        "tangent_dim": tangent.as_ref().ok(),
        "smoothable_dim": row.smoothable_dim,
        "expected_verdict": expected,
        "verdict": observed,
        "ok": ok,
        "failures": failures,
    });
    RowOutcome { ok, record, line }
}

fn table1(n: usize, seed: u64, jobs: usize) -> Result<Report> {
    let rows = table1_rows(n, &random_parameters(seed, 3))?;
    let outcomes = parallel_map(&rows, jobs, |row| evaluate_row(row, n));
    let mut r = Report::new();
    r.set("n", n);
    r.set("seed", seed);
    r.line(format!("classification table at n = {n}, seed {seed}: {} row ideals", rows.len()));
    let mut failed = 0;
    for o in &outcomes {
        r.line(o.line.clone());
        failed += usize::from(!o.ok);
    }
    r.set("rows", outcomes.iter().map(|o| o.record.clone()).collect::<Vec<_>>());
    r.set("failed_rows", failed);
    r.check("all rows", failed == 0);
    Ok(r)
}

fn lemmas(n: usize, jobs: usize) -> Result<Report> {
    let ideal = two_equal_ideal(n)?;
    let mut r = Report::new();
    r.set("n", n);
    r.line(format!("n = {n}; relations modulo the ideal of points with n-1 equal coordinates"));
    let mut relations = serde_json::Map::new();
    for (name, p) in [
        ("f", relation_f(n)),
        ("g", relation_g(n)),
        ("row 6", row6_relation(n)),
        ("row 7(a)", row7a_relation(n)),
        ("vandermonde", vandermonde(&[1, 2, 3], n)?),
    ] {
        let remainder = ideal.normal_form(&p);
        relations.insert(name.into(), json!({ "polynomial": p.to_string(), "remainder": remainder.to_string() }));
        r.line(format!("  {name}: remainder {remainder}"));
        r.check(&format!("{name} in ideal"), remainder.is_zero());
    }
    r.set("relations", Value::Object(relations));

    let shapes = partitions_of(n)?;
    let chains = parallel_map(&shapes, jobs, inclusion_chain_check);
    r.line("inclusion chain lower <= tilde <= I for every shape:");
    let mut all_hold = true;
    for c in &chains {
        all_hold &= c.holds();
        r.line(format!(
            "  {}: {} (first strict: {}, second strict: {})",
            c.mu,
            if c.holds() { "holds" } else { "FAILS" },
            c.first_strict_witness.is_some(),
            c.second_strict_witness.is_some()
        ));
    }
    r.set("inclusion_chain", serde_json::to_value(&chains)?);
    r.check("inclusion chain", all_hold);
    if n == 3 {
        let strict = chains.iter().any(|c| c.mu.parts() == [2, 1] && c.first_strict_witness.is_some());
        r.check("first inclusion strict at (2,1)", strict);
    }
    Ok(r)
}

fn tangent(ideal: &Ideal, opts: TangentOptions, expect: Option<usize>) -> Result<Report> {
    guard(ideal.nvars())?;
    let mut t = tangent_dimension_with(ideal, opts)?;
    t.wall_time_ms = 0;
    let mut r = Report::new();
    r.line(format!("ideal {ideal}"));
    r.line(format!(
        "n = {}, colength {}, N1 dims {:?}, N2 count {}, method {}, equivariant {}",
        t.n, t.colength, t.n1_dims, t.n2_count, t.method, t.equivariant
    ));
    r.line(format!("tangent dimension: {}", t.tangent_dim));
    let tangent_dim = t.tangent_dim;
    r.set("tangent", serde_json::to_value(t)?);
    if let Some(e) = expect {
        r.check("expected dimension", tangent_dim == e);
    }
    Ok(r)
}

fn decompose(ideal: &Ideal) -> Result<Report> {
    guard(ideal.nvars())?;
    let d = decompose_quotient(ideal)?;
    let peeled = is_permutation_module_sum(&d.total);
    let mut r = Report::new();
    r.set("n", ideal.nvars());
    r.set("colength", ideal.colength().finite());
    r.set("decomposition", d.total.to_string());
    r.set("graded", d.graded.as_ref().map(|g| g.iter().map(ToString::to_string).collect::<Vec<_>>()));
    r.set("permutation_module", peeled.as_ref().map(|v| strings_of(v)));
    r.line(format!("ideal {ideal}"));
    r.line(format!("colength {}", ideal.colength()));
    r.line(format!("P/I = {}", d.total));
    if let Some(g) = &d.graded {
        for (k, piece) in g.iter().enumerate() {
            r.line(format!("  degree {k}: {piece}"));
        }
    }
    if let Some(v) = &peeled {
        r.line(format!("permutation module: {}", strings_of(v).iter().map(|s| format!("M{s}")).collect::<Vec<_>>().join(" + ")));
    }
    Ok(r)
}

fn gr(n: Option<usize>, source: &IdealSource, point: Option<&str>, lambda: Option<&str>) -> Result<Report> {
    let given = [source.gens.is_some() || source.ideal.is_some() || source.row.is_some(), point.is_some(), lambda.is_some()];
    if given.iter().filter(|&&g| g).count() != 1 {
        bail!("give exactly one of --point, --lambda or an ideal (--gens, --ideal, --row)");
    }
    let mut r = Report::new();
    let lambda = lambda.map(parse_partition).transpose()?;
    let ideal = if let Some(p) = point {
        let pt = p.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        check_n(n, pt.len())?;
        guard(pt.len())?;
        r.set("point", p);
        orbit_ideal(&pt)?
    } else if let Some(l) = &lambda {
        check_n(n, l.size())?;
        guard(l.size())?;
        let pt = orbit_point(l);
        r.set("lambda", l.to_string());
        r.set("point", pt.iter().map(ToString::to_string).collect::<Vec<_>>());
        orbit_ideal(&pt)?
    } else {
        resolve_ideal(n, source)?
    };
    guard(ideal.nvars())?;
    let graded = ideal.associated_graded()?;
    let hilbert = graded.hilbert_function()?;
    r.set("n", ideal.nvars());
    r.set("colength", ideal.colength().finite());
    r.set("gr", serde_json::to_value(graded.to_json(false))?);
    r.set("gr_colength", graded.colength().finite());
    r.set("hilbert_function", hilbert.clone());
    r.line(format!("colength {}", ideal.colength()));
    list_lines(&mut r, "gr generators", graded.generators());
    r.line(format!("hilbert function {hilbert:?}"));
    r.check("colength preserved", graded.colength() == ideal.colength());
    r.check("gr homogeneous", graded.is_homogeneous());
    if let Some(l) = &lambda {
        r.check("equals Tanisaki ideal", graded == tanisaki_ideal(l, TanisakiMode::default()));
    }
    Ok(r)
}

/// Build the ideal named by `--gens`, `--ideal` or `--row`.
pub fn resolve_ideal(n: Option<usize>, source: &IdealSource) -> Result<Ideal> {
    let count = [source.gens.is_some(), source.ideal.is_some(), source.row.is_some()].iter().filter(|&&b| b).count();
    if count != 1 {
        bail!("give exactly one of --gens, --ideal or --row");
    }
    if let Some(gens) = &source.gens {
        let n = n.context("--n is required with --gens")?;
        guard(n)?;
        let polys = gens
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| Polynomial::parse(n, s).with_context(|| format!("invalid polynomial {s:?}")))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Ideal::new(n, polys)?);
    }
    if let Some(path) = &source.ideal {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        let j: IdealJson = serde_json::from_str(&text).with_context(|| format!("invalid ideal JSON in {}", path.display()))?;
        check_n(n, j.n)?;
        guard(j.n)?;
        return Ok(Ideal::from_json(&j)?);
    }
    let row = source.row.as_deref().expect("counted above");
    let n = n.context("--n is required with --row")?;
    let param = match &source.param {
        Some(p) => {
            let (a, b) = p.split_once(':').with_context(|| format!("parameter {p:?} must look like a:b"))?;
            let (a, b) = (parse_rational(a)?, parse_rational(b)?);
            if a == int(0) && b == int(0) {
                bail!("[0:0] is not a point");
            }
            Some((a, b))
        }
        None => None,
    };
    let extra: Vec<(Coeff, Coeff)> = param.iter().cloned().collect();
    let rows = table1_rows(n, &extra)?;
    let matches: Vec<&RowIdeal> = rows
        .iter()
        .filter(|r| r.row == row)
        .filter(|r| source.d.is_none_or(|d| r.d == Some(d)))
        .filter(|r| match (&param, &r.param) {
            (Some((a, b)), Some((c, e))) => a * e == b * c,
            (Some(_), None) => false,
            (None, _) => true,
        })
        .collect();
    match matches.as_slice() {
        [one] => Ok(one.ideal.clone()),
        [] => bail!("no row {row:?} at n = {n} with the given --d/--param"),
        many => {
            let labels: Vec<String> = many.iter().map(|r| row_name(r)).collect();
            bail!("row {row:?} is ambiguous; add --d or --param. Candidates: {}", labels.join(", "))
        }
    }
}
