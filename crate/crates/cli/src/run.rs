use std::fmt::Write as _;
use std::fs;

use serde::Serialize;
use serde_json::json;

use circbetti::betti::{betti_by_join_decomposition, betti_hochster, BettiTable};
use circbetti::formulas::betti_family;
use circbetti::graph::{are_isomorphic, circulant, family_graph, FamilySpec, Graph};
use circbetti::homology::FieldSpec;
use circbetti::properties::{classification_oracle, compute_report, PropertyReport};
use circbetti::Error;

use crate::args::{BettiArgs, CommonArgs, FamilyKind, Format, Method, SourceArgs};
use crate::cache::Cache;

/// Failure modes, each with its own exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Cap(String),
    Other(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Other(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Cap(m) | Failure::Other(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Cap { .. } => Failure::Cap(e.to_string()),
            Error::InvalidParameters(_)
            | Error::DistanceOutOfRange { .. }
            | Error::VertexOutOfRange { .. }
            | Error::NotPrime(_)
            | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

/// What the command prints, plus a mismatch to report after printing.
pub struct Output {
    pub text: String,
    pub mismatch: Option<String>,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            mismatch: None,
        }
    }
}

struct Source {
    graph: Graph,
    family: Option<FamilySpec>,
    label: String,
}

fn resolve(src: &SourceArgs) -> Result<Source, Failure> {
    let given = [
        src.family.is_some(),
        src.circulant.is_some(),
        src.edges.is_some(),
    ];
    if given.iter().filter(|&&b| b).count() != 1 {
        return Err(Failure::Usage(
            "give exactly one of --family, --circulant or --edges".into(),
        ));
    }
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| Failure::Usage(format!("--{name} is required for this family")))
    };
    if let Some(kind) = src.family {
        let f = match kind {
            FamilyKind::H1 => FamilySpec::H1 {
                n: need(src.n, "n")?,
                j: need(src.j, "j")?,
            },
            FamilyKind::H2 => FamilySpec::H2 {
                l: need(src.l, "l")?,
                m: need(src.m, "m")?,
            },
            FamilyKind::H3 => FamilySpec::H3 {
                l: need(src.l, "l")?,
                m: need(src.m, "m")?,
            },
        };
        let graph = family_graph(&f)?;
        return Ok(Source {
            graph,
            family: Some(f),
            label: f.to_string(),
        });
    }
    if let Some(spec) = &src.circulant {
        let spec = spec.parse()?;
        let graph = circulant(&spec)?;
        return Ok(Source {
            graph,
            family: None,
            label: format!("C({spec})"),
        });
    }
    let path = src.edges.as_ref().expect("one source is present");
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let graph = Graph::from_edge_list(&text)?;
    Ok(Source {
        graph,
        family: None,
        label: path.display().to_string(),
    })
}

fn cache_for(args: &CommonArgs) -> Cache {
    Cache::new(if args.no_cache {
        None
    } else {
        args.cache_dir.clone()
    })
}

fn table_by(
    method: Method,
    src: &Source,
    field: FieldSpec,
    cache: &Cache,
) -> Result<BettiTable, Failure> {
    let key = Cache::key(&src.graph, field, method.name());
    if let Some(hit) = cache.load(&key) {
        if let Ok((t, f)) = BettiTable::from_json(&hit) {
            if f == field {
                return Ok(t);
            }
        }
    }
    let table = match method {
        Method::Hochster => betti_hochster(&src.graph, field)?,
        Method::Join => betti_by_join_decomposition(&src.graph, field)?,
        Method::Formula => {
            let f = src
                .family
                .ok_or_else(|| Failure::Usage("--method formula needs a --family graph".into()))?;
            betti_family(&f)?
        }
        Method::Compare => unreachable!("compare is not a single method"),
    };
    cache.store(&key, &table.to_json(field));
    Ok(table)
}

fn render(t: &BettiTable, field: FieldSpec, format: Format) -> String {
    match format {
        Format::Json => t.to_json(field) + "\n",
        Format::Csv => t.to_csv(),
        Format::M2 => t.to_m2(),
        Format::Text => t.to_text(),
    }
}

pub fn betti(args: &BettiArgs) -> Result<Output, Failure> {
    if args.method == Method::Compare {
        return compare(&args.common);
    }
    let src = resolve(&args.common.source)?;
    let t = table_by(
        args.method,
        &src,
        args.common.field,
        &cache_for(&args.common),
    )?;
    Ok(Output::ok(render(
        &t,
        args.common.field,
        args.common.format,
    )))
}

#[derive(Serialize)]
struct Difference {
    i: usize,
    d: usize,
    values: Vec<(String, String)>,
}

pub fn compare(args: &CommonArgs) -> Result<Output, Failure> {
    let src = resolve(&args.source)?;
    let cache = cache_for(args);
    let mut methods = vec![Method::Hochster];
    if src.family.is_some() {
        methods.push(Method::Formula);
    }
    methods.push(Method::Join);
    let tables = methods
        .iter()
        .map(|&m| table_by(m, &src, args.field, &cache))
        .collect::<Result<Vec<_>, _>>()?;

    let mut cells: Vec<(usize, usize)> = tables
        .iter()
        .flat_map(|t| t.entries().map(|(i, d, _)| (i, d)))
        .collect();
    cells.sort_unstable();
    cells.dedup();
    let diffs: Vec<Difference> = cells
        .into_iter()
        .filter(|&(i, d)| tables.iter().any(|t| t.get(i, d) != tables[0].get(i, d)))
        .map(|(i, d)| Difference {
            i,
            d,
            values: methods
                .iter()
                .zip(&tables)
                .map(|(m, t)| (m.name().to_string(), t.get(i, d).to_string()))
                .collect(),
        })
        .collect();
    let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
    let identical = diffs.is_empty();

    let text = match args.format {
        Format::Json => {
            let doc = json!({
                "graph": src.label,
                "field": args.field,
                "methods": names,
                "identical": identical,
                "differences": diffs,
            });
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        _ => {
            let mut s = format!("{} over {}: {}\n", src.label, args.field, names.join(", "));
            if identical {
                s += "identical\n";
            }
            for diff in &diffs {
                let vals: Vec<String> = diff
                    .values
                    .iter()
                    .map(|(m, v)| format!("{m}={v}"))
                    .collect();
                writeln!(s, "differs at ({}, {}): {}", diff.i, diff.d, vals.join(" ")).unwrap();
            }
            s
        }
    };
    let mismatch = (!identical).then(|| format!("{} entries differ", diffs.len()));
    Ok(Output { text, mismatch })
}

fn report_text(r: &PropertyReport) -> String {
    let mut s = String::new();
    let rows: [(&str, String); 12] = [
        ("field", r.field.to_string()),
        ("alpha", r.alpha.to_string()),
        ("nu", r.nu.to_string()),
        ("well_covered", r.well_covered.to_string()),
        ("cohen_macaulay", r.cohen_macaulay.to_string()),
        ("buchsbaum", r.buchsbaum.to_string()),
        ("vertex_decomposable", r.vertex_decomposable.to_string()),
        ("shellable", r.shellable.to_string()),
        ("sequentially_cm", r.sequentially_cm.to_string()),
        ("s2", r.s2.to_string()),
        ("reg", r.reg.to_string()),
        ("pd", r.pd.to_string()),
    ];
    for (k, v) in rows {
        writeln!(s, "{k:<20} {v}").unwrap();
    }
    s
}

pub fn properties(args: &CommonArgs) -> Result<Output, Failure> {
    if matches!(args.format, Format::Csv | Format::M2) {
        return Err(Failure::Usage(
            "properties supports --format json or text".into(),
        ));
    }
    let src = resolve(&args.source)?;
    let cache = cache_for(args);
    let key = Cache::key(&src.graph, args.field, "properties");
    let computed = match cache.load(&key).and_then(|s| serde_json::from_str(&s).ok()) {
        Some(r) => r,
        None => {
            let r = compute_report(&src.graph, args.field)?;
            cache.store(&key, &serde_json::to_string(&r).expect("serializes"));
            r
        }
    };
    let predicted = src.family.map(|f| PropertyReport {
        field: args.field,
        ..classification_oracle(&f)
    });
    let differences = predicted.as_ref().map(|p| computed.differences(p));
    let matched = differences.as_ref().map(Vec::is_empty);

    let text = match args.format {
        Format::Json => {
            let mut doc = json!({ "graph": src.label, "computed": computed });
            if let (Some(p), Some(m)) = (&predicted, matched) {
                doc["predicted"] = json!(p);
                doc["match"] = json!(m);
            }
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        _ => {
            let mut s = format!("{}\n{}", src.label, report_text(&computed));
            if let Some(diff) = &differences {
                writeln!(s, "{:<20} {}", "match", diff.is_empty()).unwrap();
                if !diff.is_empty() {
                    writeln!(s, "{:<20} {}", "differs on", diff.join(", ")).unwrap();
                }
            }
            s
        }
    };
    let mismatch = differences
        .filter(|d| !d.is_empty())
        .map(|d| format!("prediction differs on {}", d.join(", ")));
    Ok(Output { text, mismatch })
}

pub fn isocheck(args: &CommonArgs) -> Result<Output, Failure> {
    let src = resolve(&args.source)?;
    let f = src
        .family
        .ok_or_else(|| Failure::Usage("isocheck needs a --family graph".into()))?;
    let form = f.join_form()?;
    let iso = are_isomorphic(&src.graph, &form)?;
    let decomposition = match f {
        FamilySpec::H1 { .. } => {
            let (d, k) = f.h1_gcd_split().expect("H1");
            format!("{d}-fold join of the complement of C_{k}")
        }
        FamilySpec::H2 { l, m } => format!("{l}-fold join of C_{m}"),
        FamilySpec::H3 { l, m } => {
            format!("complete multipartite graph with {l} parts of size {m}")
        }
    };
    let text = match args.format {
        Format::Json => {
            let doc =
                json!({ "graph": src.label, "decomposition": decomposition, "isomorphic": iso });
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        _ => format!(
            "{} {} the {}\n",
            src.label,
            if iso {
                "is isomorphic to"
            } else {
                "is NOT isomorphic to"
            },
            decomposition
        ),
    };
    let mismatch = (!iso).then(|| "graph is not isomorphic to its decomposition".to_string());
    Ok(Output { text, mismatch })
}
