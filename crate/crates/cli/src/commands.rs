use std::time::{Duration, Instant};

use serde::Serialize;

use hemibundle::bounds::{evaluate, BoundId, BoundValue, Params, Validation};
use hemibundle::constructions::{construct, ConstructionId, ConstructionTag, Constructed};
use hemibundle::format::{family_to_lists, parse_family, render_inline, write_family};
use hemibundle::search::{
    check_layer_inequality, compare_classes, expected_classes, solve, Engine, Kind, LayerCheck, Problem,
    SearchOptions, SearchReport,
};
use hemibundle::shifting::is_shifted;
use hemibundle::Family;

use crate::grid::{parse_grid, row_get};
use crate::{CliError, Command, Ctx, EXIT_MISMATCH, EXIT_OK};

type Res<T = i32> = Result<T, CliError>;

pub(crate) fn dispatch(ctx: &mut Ctx, command: Command) -> Res {
    match command {
        Command::Bound { which, params, unchecked } => bound(ctx, &which, params.params(), unchecked),
        Command::Construct { tag, params, y, out, partner_out } => {
            construct_cmd(ctx, &tag, params.params(), y, out.as_deref(), partner_out.as_deref())
        }
        Command::Check { pred, family, other, t, s } => check(ctx, &pred, &family, other.as_deref(), t, s),
        Command::Search { kind, params, engine, max_seconds, show_maximizers } => {
            search_cmd(ctx, &kind, params.params(), &engine, max_seconds, show_maximizers)
        }
        Command::Verify { theorem, grid, engine, max_seconds } => verify(ctx, &theorem, &grid, &engine, max_seconds),
    }
}

fn emit_json<T: Serialize>(ctx: &mut Ctx, value: &T) -> Res<()> {
    serde_json::to_writer_pretty(&mut *ctx.out, value)?;
    writeln!(ctx.out)?;
    Ok(())
}

macro_rules! say {
    ($ctx:expr, $($arg:tt)*) => {
        writeln!($ctx.out, $($arg)*)?
    };
}

fn read_family(path: &str) -> Res<Family> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::File { path: path.to_string(), source })?;
    Ok(parse_family(&text)?)
}

fn write_file(path: &str, text: &str) -> Res<()> {
    std::fs::write(path, text).map_err(|source| CliError::File { path: path.to_string(), source })
}

#[derive(Serialize)]
struct BoundJson<'a> {
    which: &'a str,
    params: Params,
    regime: &'a str,
    value: String,
    unchecked: bool,
}

fn bound(ctx: &mut Ctx, which: &str, params: Params, unchecked: bool) -> Res {
    let id: BoundId = which.parse()?;
    let validation = if unchecked { Validation::Unchecked } else { Validation::Strict };
    let v = evaluate(id, &params, validation)?;
    if ctx.json {
        let json =
            BoundJson { which: id.name(), params, regime: v.regime, value: v.value.to_string(), unchecked: v.unchecked };
        emit_json(ctx, &json)?;
    } else if v.unchecked {
        say!(ctx, "{} (unchecked: parameters were not validated)", v.value);
    } else {
        say!(ctx, "{}", v.value);
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ConstructJson {
    tag: &'static str,
    params: Params,
    size: usize,
    family: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    partner: Option<Vec<Vec<usize>>>,
}

fn construct_cmd(
    ctx: &mut Ctx,
    tag: &str,
    params: Params,
    y: Option<i64>,
    out: Option<&str>,
    partner_out: Option<&str>,
) -> Res {
    let tag: ConstructionTag = tag.parse()?;
    let built = construct(&ConstructionId { tag, params, y })?;
    let partner = match &built {
        Constructed::Pair(_, g) => Some(g),
        Constructed::Single(_) => None,
    };
    if partner.is_none() && partner_out.is_some() {
        return Err(CliError::Usage(format!("`{tag}` builds a single family; --partner-out does not apply")));
    }
    let f = built.first();
    if let Some(path) = out {
        write_file(path, &write_family(f))?;
    }
    if let (Some(path), Some(g)) = (partner_out, partner) {
        write_file(path, &write_family(g))?;
    }
    if ctx.json {
        let json = ConstructJson {
            tag: tag.name(),
            params,
            size: built.total_size(),
            family: family_to_lists(f),
            partner: partner.map(family_to_lists),
        };
        emit_json(ctx, &json)?;
    } else if out.is_none() {
        write!(ctx.out, "{}", write_family(f))?;
    } else {
        say!(ctx, "{tag}: {} sets", f.len());
        if let Some(g) = partner {
            say!(ctx, "partner: {} sets, total {}", g.len(), built.total_size());
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckJson {
    pred: String,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    layers: Option<Vec<LayerCheck>>,
}

fn check(ctx: &mut Ctx, pred: &str, path: &str, other: Option<&str>, t: Option<usize>, s: Option<usize>) -> Res {
    let f = read_family(path)?;
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| CliError::Usage(format!("--pred {pred} needs --{flag}")));
    let mut value = None;
    let mut layers = None;
    let holds = match pred {
        "intersecting" => f.is_intersecting(),
        "t-intersecting" => f.is_t_intersecting(need(t, "t")?),
        "s-union" => f.is_s_union(need(s, "s")?),
        "shifted" => is_shifted(&f),
        "diversity" => {
            value = Some(f.diversity().to_string());
            true
        }
        "cross" => {
            let path = other.ok_or_else(|| CliError::Usage("--pred cross needs --other".into()))?;
            f.cross_intersects(&read_family(path)?)?
        }
        "layers" => {
            let rows = check_layer_inequality(&f, need(s, "s")?)?;
            let ok = rows.iter().all(|r| r.consistent);
            layers = Some(rows);
            ok
        }
        _ => return Err(CliError::Usage(format!("unknown predicate `{pred}`"))),
    };
    if ctx.json {
        emit_json(ctx, &CheckJson { pred: pred.to_string(), holds, value, layers })?;
    } else if let Some(v) = value {
        say!(ctx, "{v}");
    } else if let Some(rows) = layers {
        say!(ctx, "{:>3}  {:>8}  {:>8}  tight", "i", "lhs", "rhs");
        for r in rows {
            say!(ctx, "{:>3}  {:>8}  {:>8}  {}", r.i, r.lhs, r.rhs, if r.tight { "yes" } else { "no" });
        }
    } else {
        say!(ctx, "{holds}");
    }
    Ok(if holds { EXIT_OK } else { EXIT_MISMATCH })
}

#[derive(Serialize)]
struct ClassJson {
    representative: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    partner: Option<Vec<Vec<usize>>>,
    size: usize,
}

#[derive(Serialize)]
struct SearchJson {
    kind: &'static str,
    params: Params,
    engine: &'static str,
    optimum: Option<String>,
    bound: Option<String>,
    matches_bound: bool,
    maximizer_count: usize,
    classes: Vec<ClassJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    maximizers: Option<Vec<Vec<Vec<usize>>>>,
    exhaustive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

fn scope_note(rep: &SearchReport) -> Option<String> {
    let mut parts: Vec<String> = rep.note.iter().cloned().collect();
    if !rep.exhaustive {
        parts.push("non-shifted maximizers are certified only where an exhaustive cross-check ran".into());
    }
    (!parts.is_empty()).then(|| parts.join("; "))
}

fn run_search(ctx: &Ctx, kind: Kind, params: Params, engine: Engine, max_seconds: Option<u64>) -> Res<SearchReport> {
    let options = SearchOptions {
        threads: ctx.threads,
        max_duration: max_seconds.map(Duration::from_secs),
        ..Default::default()
    };
    Ok(solve(&Problem { kind, params, engine }, &options)?)
}

fn search_cmd(
    ctx: &mut Ctx,
    kind: &str,
    params: Params,
    engine: &str,
    max_seconds: Option<u64>,
    show_maximizers: bool,
) -> Res {
    let kind: Kind = kind.parse()?;
    let engine: Engine = engine.parse()?;
    let rep = run_search(ctx, kind, params, engine, max_seconds)?;
    let note = scope_note(&rep);
    if ctx.json {
        let json = SearchJson {
            kind: rep.kind.name(),
            params: rep.params,
            engine: rep.engine.name(),
            optimum: rep.optimum.map(|v| v.to_string()),
            bound: rep.bound.as_ref().map(|b| b.value.to_string()),
            matches_bound: rep.matches_bound,
            maximizer_count: rep.maximizer_count(),
            classes: rep
                .classes
                .iter()
                .map(|c| ClassJson {
                    representative: family_to_lists(&c.representative),
                    partner: c.partner.as_ref().map(family_to_lists),
                    size: c.size,
                })
                .collect(),
            maximizers: show_maximizers.then(|| rep.maximizers.iter().map(family_to_lists).collect()),
            exhaustive: rep.exhaustive,
            note,
            elapsed_ms: ctx.timing.then_some(rep.elapsed.as_millis()),
        };
        emit_json(ctx, &json)?;
        return Ok(EXIT_OK);
    }
    let show = |v: Option<u64>| v.map_or("none".to_string(), |v| v.to_string());
    say!(ctx, "kind        {}", rep.kind);
    say!(ctx, "params      {}", rep.params);
    say!(ctx, "engine      {}{}", rep.engine, if rep.exhaustive { " (exhaustive)" } else { "" });
    say!(ctx, "optimum     {}", show(rep.optimum));
    match &rep.bound {
        Some(b) => say!(ctx, "bound       {}{}", b.value, regime_suffix(b)),
        None => say!(ctx, "bound       out of range"),
    }
    say!(ctx, "matches     {}", if rep.matches_bound { "yes" } else { "no" });
    say!(ctx, "maximizers  {}", rep.maximizer_count());
    say!(ctx, "classes     {}", rep.classes.len());
    for (i, c) in rep.classes.iter().enumerate() {
        say!(ctx, "  [{}] {} maximizers, |F| = {}: {}", i + 1, c.size, c.representative.len(), render_inline(&c.representative));
        if let Some(g) = &c.partner {
            say!(ctx, "      partner |G| = {}", g.len());
        }
    }
    if show_maximizers {
        for f in &rep.maximizers {
            say!(ctx, "  {}", render_inline(f));
        }
    }
    if let Some(note) = note {
        say!(ctx, "note        {note}");
    }
    if ctx.timing {
        say!(ctx, "elapsed     {} ms", rep.elapsed.as_millis());
    }
    Ok(EXIT_OK)
}

fn regime_suffix(b: &BoundValue) -> String {
    if b.regime.is_empty() {
        String::new()
    } else {
        format!(" (regime {})", b.regime)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum Relation {
    Equal,
    AtMost,
}

struct Theorem {
    kind: Kind,
    /// Bound the optimum is compared with; `None` picks the kind's own.
    bound: Option<BoundId>,
    fixed_r: Option<i64>,
    relation: Relation,
}

fn theorem(name: &str) -> Res<Theorem> {
    let t = |kind, bound, fixed_r, relation| Theorem { kind, bound, fixed_r, relation };
    Ok(match name {
        "f16" => t(Kind::Hemibundled, Some(BoundId::F16), Some(1), Relation::Equal),
        "w23" => t(Kind::Hemibundled, Some(BoundId::W23), Some(2), Relation::Equal),
        "main1" => t(Kind::Hemibundled, None, None, Relation::Equal),
        "f24" => t(Kind::CrossPair, None, None, Relation::Equal),
        // an upper bound without an equality statement
        "main3" => t(Kind::Capped, None, None, Relation::AtMost),
        "diversity" => t(Kind::Diversity, None, None, Relation::Equal),
        "katona" => t(Kind::SUnion, None, None, Relation::Equal),
        "main5" => t(Kind::Conditioned, None, None, Relation::Equal),
        _ => return Err(CliError::Usage(format!("unknown theorem `{name}`"))),
    })
}

#[derive(Serialize)]
struct RowJson {
    params: Params,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    optimum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<String>,
    matches: bool,
    classes: &'static str,
    class_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    engine: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    theorem: &'a str,
    grid: &'a str,
    relation: Relation,
    rows: Vec<RowJson>,
    checked: usize,
    skipped: usize,
    mismatches: usize,
}

fn row_params(row: &crate::grid::Row, fixed_r: Option<i64>) -> Res<Params> {
    for (name, _) in row {
        if !matches!(name.as_str(), "n" | "k" | "t" | "r" | "s" | "l" | "d") {
            return Err(CliError::Usage(format!("grid variable `{name}` is not a parameter")));
        }
    }
    let mut p = Params {
        n: row_get(row, "n"),
        k: row_get(row, "k"),
        t: row_get(row, "t"),
        r: row_get(row, "r"),
        s: row_get(row, "s"),
        l: row_get(row, "l"),
        d: row_get(row, "d"),
    };
    if let Some(r) = fixed_r {
        if p.r.is_some_and(|v| v != r) {
            return Err(CliError::Usage(format!("this theorem fixes r = {r}")));
        }
        p.r = Some(r);
    }
    Ok(p)
}

fn verify(ctx: &mut Ctx, name: &str, grid: &str, engine: &str, max_seconds: Option<u64>) -> Res {
    let th = theorem(name)?;
    let engine: Engine = engine.parse()?;
    let rows = parse_grid(grid)?;
    let started = Instant::now();
    let mut out_rows = Vec::new();
    let (mut checked, mut skipped, mut mismatches) = (0, 0, 0);
    for row in &rows {
        let params = row_params(row, th.fixed_r)?;
        let bound_id = th.bound.or_else(|| th.kind.bound_id(&params));
        let bound = bound_id.map(|id| evaluate(id, &params, Validation::Strict));
        let bound = match bound {
            Some(Ok(b)) => b,
            Some(Err(hemibundle::Error::Range(_))) | None => {
                skipped += 1;
                out_rows.push(RowJson {
                    params,
                    status: "out_of_range",
                    optimum: None,
                    bound: None,
                    matches: false,
                    classes: "not_asserted",
                    class_count: 0,
                    engine: None,
                    elapsed_ms: None,
                });
                continue;
            }
            Some(Err(e)) => return Err(e.into()),
        };
        let rep = run_search(ctx, th.kind, params, engine, max_seconds)?;
        let matches = match (rep.optimum, bound.as_u64(), th.relation) {
            (Some(v), Some(b), Relation::Equal) => v == b,
            (Some(v), Some(b), Relation::AtMost) => v <= b,
            _ => false,
        };
        let classes = match (&rep.bound, th.relation) {
            (Some(kb), Relation::Equal) if matches => match expected_classes(th.kind, &rep.params, kb)? {
                Some(expected) => {
                    let cmp = compare_classes(&rep.class_families(), &expected)?;
                    let ok = if rep.exhaustive { cmp.exact() } else { cmp.all_expected };
                    if ok {
                        "ok"
                    } else {
                        "mismatch"
                    }
                }
                None => "not_asserted",
            },
            _ => "not_asserted",
        };
        checked += 1;
        let ok = matches && classes != "mismatch";
        if !ok {
            mismatches += 1;
        }
        out_rows.push(RowJson {
            params,
            status: if ok { "ok" } else { "mismatch" },
            optimum: rep.optimum.map(|v| v.to_string()),
            bound: Some(bound.value.to_string()),
            matches,
            classes,
            class_count: rep.classes.len(),
            engine: Some(rep.engine.name()),
            elapsed_ms: ctx.timing.then_some(rep.elapsed.as_millis()),
        });
    }
    if checked == 0 {
        return Err(CliError::Usage("no grid row lies inside the theorem's parameter range".into()));
    }
    if ctx.json {
        let json =
            VerifyJson { theorem: name, grid, relation: th.relation, rows: out_rows, checked, skipped, mismatches };
        emit_json(ctx, &json)?;
    } else {
        let rel = if th.relation == Relation::Equal { "=" } else { "<=" };
        say!(ctx, "{:<28} {:>10} {:>10} {:>6} {:>13} {:>8}{}", "params", "optimum", "bound", "match", "classes", "engine", if ctx.timing { "       ms" } else { "" });
        for r in &out_rows {
            let time = match (ctx.timing, r.elapsed_ms) {
                (true, Some(ms)) => format!(" {ms:>8}"),
                (true, None) => format!(" {:>8}", "-"),
                _ => String::new(),
            };
            say!(
                ctx,
                "{:<28} {:>10} {:>10} {:>6} {:>13} {:>8}{}",
                r.params.to_string(),
                r.optimum.as_deref().unwrap_or("-"),
                r.bound.as_deref().unwrap_or("-"),
                if r.status == "out_of_range" { "skip" } else if r.matches { "true" } else { "false" },
                r.classes,
                r.engine.unwrap_or("-"),
                time
            );
        }
        say!(ctx, "{checked} rows checked (optimum {rel} bound), {skipped} out of range, {mismatches} mismatches");
        if ctx.timing {
            say!(ctx, "elapsed {} ms", started.elapsed().as_millis());
        }
    }
    Ok(if mismatches == 0 { EXIT_OK } else { EXIT_MISMATCH })
}
