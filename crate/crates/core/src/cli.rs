//! Command-line front end. Every command builds a JSON report; tables are
//! rendered from that JSON.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::census::{complete_type, enumerate_types, parse_rule_set, rule_citation, CensusOptions};
use crate::cyclotomic::{parse_rational, CycNumber};
use crate::fusion::{from_group_characters, Axiom, FusionDatum, Profile, TypeSignature};
use crate::groups::{
    builtin, d3xd3_reflections, g12_gamma, g18_gamma, group_from_spec, AbelianBasis, AltBicharacter, FiniteGroup,
};
use crate::hopf::{
    algebra_characters, build_h8, build_lifted_twist, central_group_likes, cocommutativity_criterion,
    drinfeld_double_group_type, from_group, group_like_elements, hit_left, surviving_group_likes, twist_hopf,
    verify_hopf_axioms, verify_twist, yd_one_dim_pairs, AxiomReport, HopfData,
};
use crate::search::{search_fusion, SearchOutcome, DEFAULT_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(
    name = "semihopf",
    version,
    about = "Exact computations for small semisimple Hopf algebras"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    pub format: Format,
    /// Worker threads (default: all cores). Affects wall time only.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Node limit for fusion searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate algebra types of a given dimension and filter them by divisibility rules.
    Census(CensusArgs),
    /// Search for a fusion datum of a given type.
    FusionSearch(FusionSearchArgs),
    /// Check the fusion axioms on a datum.
    FusionVerify(FusionVerifyArgs),
    /// Algebra type of the Drinfeld double of a group.
    Double(DoubleArgs),
    /// Full report on the eight-dimensional Hopf algebra H8.
    H8Report,
    /// Same as h8-report.
    H8 {
        #[command(subcommand)]
        what: H8Command,
    },
    /// Twist a group algebra by a cocycle lifted from an abelian subgroup.
    Twist(TwistArgs),
}

#[derive(Debug, Subcommand)]
pub enum H8Command {
    Report,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub dim: u64,
    /// Rule set: "all", "R1..R8", "R1-R8" or a comma list.
    #[arg(long, default_value = "all")]
    pub rules: String,
    /// Run the fusion oracle on the listed survivors, or on all survivors when no type is given.
    #[arg(long, num_args = 0..)]
    pub oracle: Option<Vec<String>>,
    /// Only types with this many degree-one entries.
    #[arg(long = "n")]
    pub n: Option<u64>,
    /// Also list commutative (group-algebra) types.
    #[arg(long)]
    pub improper: bool,
}

#[derive(Debug, Args)]
pub struct FusionSearchArgs {
    #[arg(long = "type")]
    pub ty: String,
    #[arg(long, default_value = "hopf")]
    pub profile: String,
}

#[derive(Debug, Args)]
pub struct FusionVerifyArgs {
    /// Fusion datum as JSON, or @path to a JSON file.
    #[arg(long, conflicts_with = "group", required_unless_present = "group")]
    pub datum: Option<String>,
    /// Verify the character ring of a group instead.
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long, default_value = "hopf")]
    pub profile: String,
}

#[derive(Debug, Args)]
pub struct DoubleArgs {
    #[arg(long)]
    pub group: String,
}

#[derive(Debug, Args)]
pub struct TwistArgs {
    #[arg(long)]
    pub group: String,
    /// Subgroup name (Gamma, A, all, center) or an index list such as "[0,3,6,9]".
    #[arg(long)]
    pub subgroup: String,
    /// Matrix of bicharacter values on basis pairs: "p/q" turns or cyclotomic objects.
    #[arg(long)]
    pub bicharacter: String,
    #[arg(long)]
    pub check_cocommutative: bool,
    #[arg(long)]
    pub group_likes: bool,
}

/// Result of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    code: i32,
    command: Value,
    payload: Map<String, Value>,
    citations: Vec<(String, String)>,
}

impl Report {
    fn into_value(self) -> Value {
        let mut out = self.payload;
        out.insert("command".into(), self.command);
        let cites: Vec<Value> = self
            .citations
            .into_iter()
            .map(|(item, citation)| json!({"item": item, "citation": citation}))
            .collect();
        out.insert("citations".into(), Value::Array(cites));
        Value::Object(out)
    }
}

#[derive(Debug)]
struct BadInput(String);

impl<E: std::fmt::Display> From<E> for BadInput {
    fn from(e: E) -> Self {
        BadInput(e.to_string())
    }
}

type CmdResult = Result<Report, BadInput>;

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let exec = || dispatch(&cli);
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(exec),
            Err(e) => Err(BadInput(e.to_string())),
        },
        None => exec(),
    };
    match result {
        Ok(report) => {
            let code = report.code;
            let value = report.into_value();
            let stdout = match cli.format {
                Format::Json => serde_json::to_string_pretty(&value).expect("serializable") + "\n",
                Format::Table => render_table(&value),
            };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(BadInput(msg)) => Outcome {
            code: EXIT_BAD_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Census(a) => census(a, cli.budget),
        Command::FusionSearch(a) => fusion_search(a, cli.budget),
        Command::FusionVerify(a) => fusion_verify(a),
        Command::Double(a) => double(a),
        Command::H8Report
        | Command::H8 {
            what: H8Command::Report,
        } => h8_report(),
        Command::Twist(a) => twist(a),
    }
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

fn parse_profile(s: &str) -> Result<Profile, BadInput> {
    Ok(s.parse::<Profile>()?)
}

fn parse_group(s: &str) -> Result<FiniteGroup, BadInput> {
    let t = s.trim();
    if t.starts_with('{') {
        let v: Value = serde_json::from_str(t)?;
        Ok(group_from_spec(&v)?)
    } else {
        Ok(builtin(t)?)
    }
}

fn axiom_citations(profile: Profile) -> Vec<(String, String)> {
    let mut axioms = vec![
        Axiom::DualInvolution,
        Axiom::Unit,
        Axiom::Duality,
        Axiom::Frobenius,
        Axiom::Degree,
        Axiom::GroupLikeMultiplicity,
        Axiom::GroupLikeClosure,
        Axiom::Associativity,
    ];
    if profile == Profile::Hopf {
        axioms.extend([
            Axiom::StabilizerOrder,
            Axiom::StabilizerExponent,
            Axiom::ClosureDivisibility,
            Axiom::NrDichotomy,
        ]);
    }
    axioms
        .into_iter()
        .map(|a| (a.name().to_string(), a.citation().to_string()))
        .collect()
}

fn census(a: &CensusArgs, budget: u64) -> CmdResult {
    if a.dim == 0 {
        return Err(BadInput("dimension must be positive".into()));
    }
    let rules = parse_rule_set(&a.rules)?;
    let mut opts = CensusOptions::new(rules.clone());
    opts.proper_only = !a.improper;
    opts.n_filter = a.n;
    opts.budget = budget;
    let explicit_oracle = match &a.oracle {
        None => None,
        Some(list) if list.is_empty() => Some(Vec::new()),
        Some(list) => Some(
            list.iter()
                .map(|s| s.parse::<TypeSignature>())
                .collect::<Result<Vec<_>, _>>()?,
        ),
    };
    let result = match explicit_oracle {
        Some(list) if list.is_empty() => {
            let first = enumerate_types(a.dim, &opts);
            opts.oracle = Some(first.survivors);
            enumerate_types(a.dim, &opts)
        }
        other => {
            opts.oracle = other;
            enumerate_types(a.dim, &opts)
        }
    };
    let mut citations: Vec<(String, String)> = result
        .rules
        .iter()
        .map(|r| (r.to_string(), rule_citation(*r).to_string()))
        .collect();
    if a.oracle.is_some() {
        citations.extend(axiom_citations(Profile::Hopf));
    }
    Ok(Report {
        code: EXIT_OK,
        command: json!({
            "name": "census",
            "dim": a.dim,
            "rules": a.rules,
            "oracle": a.oracle,
            "n": a.n,
            "improper": a.improper,
            "budget": budget,
        }),
        payload: object(serde_json::to_value(&result)?),
        citations,
    })
}

fn fusion_search(a: &FusionSearchArgs, budget: u64) -> CmdResult {
    let ty: TypeSignature = a.ty.parse()?;
    let profile = parse_profile(&a.profile)?;
    let out = search_fusion(&ty, profile, budget);
    let code = match &out {
        SearchOutcome::Feasible { .. } => EXIT_OK,
        SearchOutcome::Infeasible { .. } => EXIT_NEGATIVE,
        SearchOutcome::Inconclusive { .. } => EXIT_BUDGET,
    };
    let mut payload = object(serde_json::to_value(&out)?);
    payload.insert("type".into(), json!(ty.to_string()));
    payload.insert("dim".into(), json!(ty.dim()));
    payload.insert("profile".into(), json!(a.profile));
    Ok(Report {
        code,
        command: json!({"name": "fusion-search", "type": a.ty, "profile": a.profile, "budget": budget}),
        payload,
        citations: axiom_citations(profile),
    })
}

fn fusion_verify(a: &FusionVerifyArgs) -> CmdResult {
    let profile = parse_profile(&a.profile)?;
    let datum = match (&a.datum, &a.group) {
        (Some(d), _) => {
            let text = match d.strip_prefix('@') {
                Some(path) => std::fs::read_to_string(path)?,
                None => d.clone(),
            };
            let v: Value = serde_json::from_str(&text)?;
            FusionDatum::from_json(&v)?
        }
        (None, Some(g)) => from_group_characters(&parse_group(g)?)?,
        (None, None) => return Err(BadInput("either --datum or --group is required".into())),
    };
    let report = datum.verify(profile);
    let code = if report.passed() { EXIT_OK } else { EXIT_NEGATIVE };
    let payload = object(json!({
        "type": datum.type_signature().to_string(),
        "rank": datum.rank(),
        "passed": report.passed(),
        "checks": report.checks,
        "profile": a.profile,
    }));
    Ok(Report {
        code,
        command: json!({"name": "fusion-verify", "datum": a.datum, "group": a.group, "profile": a.profile}),
        payload,
        citations: axiom_citations(profile),
    })
}

fn double(a: &DoubleArgs) -> CmdResult {
    let g = parse_group(&a.group)?;
    let ty = drinfeld_double_group_type(&g)?;
    let mut classes = Vec::new();
    for class in g.conjugacy_classes() {
        let c = g.centralizer(class[0]);
        let degrees = g.subgroup_as_group(&c)?.irreducible_degrees()?;
        classes.push(json!({
            "representative": class[0],
            "class_size": class.len(),
            "centralizer_order": c.len(),
            "centralizer_degrees": degrees,
        }));
    }
    let payload = object(json!({
        "group": g.name(),
        "order": g.order(),
        "type": ty.to_string(),
        "dim": ty.dim(),
        "classes": classes,
    }));
    Ok(Report {
        code: EXIT_OK,
        command: json!({"name": "double", "group": a.group}),
        payload,
        citations: vec![(
            "double".into(),
            "irreducible D(G)-modules are induced from (conjugacy class, irreducible of the centralizer)".into(),
        )],
    })
}

fn hopf_report_json(r: &AxiomReport) -> Value {
    json!({
        "passed": r.passed(),
        "checks": r.checks,
        "antipode_squared_identity": r.antipode_squared_identity,
    })
}

fn labels_of(h: &HopfData, vs: &[Vec<CycNumber>]) -> Vec<String> {
    vs.iter().map(|v| h.format_element(v)).collect()
}

fn h8_report() -> CmdResult {
    let h = build_h8();
    let axioms = verify_hopf_axioms(&h);
    let (x, y, z) = (1, 2, 4);
    let chars = algebra_characters(&h, &[x, y, z])?;
    let gl = group_like_elements(&h)?;
    let central = central_group_likes(&h)?;
    let yd = yd_one_dim_pairs(&h)?;

    let mut char_rows = Vec::new();
    let mut hit_ok = true;
    for eta in &chars {
        let got = hit_left(eta, &h.basis(z), &h)?;
        // ½(1 + y + η(x)(1 − y)) η(z) z
        let half = CycNumber::from_frac(1, 2);
        let ex = &eta.values[x];
        let mut factor = vec![CycNumber::zero(); h.dim()];
        factor[0] = &half * &(&CycNumber::one() + ex);
        factor[y] = &half * &(&CycNumber::one() - ex);
        let mut want = h.mul(&factor, &h.basis(z))?;
        for w in want.iter_mut() {
            *w = &*w * &eta.values[z];
        }
        let matches = got == want;
        hit_ok &= matches;
        char_rows.push(json!({
            "x": eta.values[x],
            "y": eta.values[y],
            "z": eta.values[z],
            "hit_left_z": h.format_element(&got),
            "hit_left_matches_closed_form": matches,
        }));
    }

    // generators ⟨xy ⊗ ε⟩, ⟨1 ⊗ αβ⟩, ⟨x ⊗ α⟩ with αβ the nontrivial central character
    let eps = chars.iter().find(|e| e.values == h.counit()).cloned();
    let ab = chars
        .iter()
        .find(|e| e.values[x].is_one() && !e.values[z].is_one())
        .cloned();
    let mut generator_check = Value::Null;
    if let (Some(eps), Some(ab)) = (eps, ab) {
        let xy = h.basis(3);
        let one = h.basis(0);
        let xv = h.basis(x);
        let mut best = None;
        for alpha in chars.iter().filter(|e| e.values[x] == -CycNumber::one()) {
            let ids = [yd.position(&xy, &eps), yd.position(&one, &ab), yd.position(&xv, alpha)];
            if let [Some(a), Some(b), Some(c)] = ids {
                let span = yd.group.generated(&[a, b, c]).len();
                best = Some(json!({"pairs_present": true, "generated_order": span}));
                if span == 8 {
                    break;
                }
            }
        }
        generator_check = best.unwrap_or(json!({"pairs_present": false}));
    }
    let coalgebra_h8: TypeSignature = "1,4;2,1".parse().expect("literal");
    let double_coalgebra = coalgebra_h8.tensor(&coalgebra_h8);
    let double_algebra = complete_type(64, yd.order() as u64, &[2]).map(|t| t.to_string()).ok();

    let passed = axioms.passed()
        && axioms.antipode_squared_identity == Some(true)
        && chars.len() == 4
        && yd.order() == 8
        && hit_ok;
    let pairs: Vec<Value> = yd
        .pairs
        .iter()
        .map(|p| {
            json!({
                "group_like": p.group_like_label,
                "x": p.character.values[x],
                "y": p.character.values[y],
                "z": p.character.values[z],
            })
        })
        .collect();
    let payload = object(json!({
        "dim": h.dim(),
        "labels": h.labels(),
        "axioms": hopf_report_json(&axioms),
        "group_likes": labels_of(&h, &gl),
        "central_group_likes": labels_of(&h, &central),
        "characters": char_rows,
        "yd_pairs": {
            "count": yd.order(),
            "abelian": yd.abelian,
            "invariant_factors": yd.invariant_factors,
            "exponent": yd.exponent,
            "pairs": pairs,
            "generators_check": generator_check,
        },
        "double": {
            "coalgebra_type": double_coalgebra.to_string(),
            "algebra_type": double_algebra,
        },
        "passed": passed,
    }));
    Ok(Report {
        code: if passed { EXIT_OK } else { EXIT_NEGATIVE },
        command: json!({"name": "h8-report"}),
        payload,
        citations: vec![
            ("antipode_squared_identity".into(), "semisimple in characteristic zero iff S² = id".into()),
            (
                "yd_pairs".into(),
                "one-dimensional Yetter-Drinfeld modules are V(g, η) with (η⇀h)g = g(h↼η); they are the group-likes of D(H)*".into(),
            ),
            ("double.algebra_type".into(), "Nichols-Zoeller divisibility with n = |G(D(H)*)|".into()),
        ],
    })
}

fn parse_subgroup(g: &FiniteGroup, s: &str) -> Result<Vec<usize>, BadInput> {
    let t = s.trim();
    let name = g.name();
    let sub = match t {
        "Gamma" | "gamma" | "Γ" if name == "G12" => g12_gamma(),
        "Gamma" | "gamma" | "Γ" if name == "G18" => g18_gamma(),
        "A" | "reflections" if name == "D3xD3" => d3xd3_reflections(),
        "all" | "G" | "whole" => g.elements().collect(),
        "center" => g.center().clone(),
        _ => {
            let inner = t.trim_start_matches('[').trim_end_matches(']');
            inner
                .split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| BadInput(format!("unknown subgroup \"{t}\" for group {name}")))?
        }
    };
    if sub.iter().any(|&x| x >= g.order()) {
        return Err(BadInput("subgroup index out of range".into()));
    }
    Ok(sub)
}

fn parse_bichar_entry(v: &Value) -> Result<CycNumber, BadInput> {
    match v {
        Value::String(s) => {
            let q = parse_rational(s)?;
            Ok(CycNumber::root_of_unity(*q.denom(), *q.numer())?)
        }
        Value::Number(n) => {
            let k = n
                .as_i64()
                .ok_or_else(|| BadInput(format!("bad bicharacter entry {n}")))?;
            Ok(CycNumber::from_integer(k))
        }
        Value::Object(_) => Ok(serde_json::from_value(v.clone())?),
        other => Err(BadInput(format!("bad bicharacter entry {other}"))),
    }
}

fn parse_bicharacter(s: &str, orders: &[u64]) -> Result<AltBicharacter, BadInput> {
    let v: Value = serde_json::from_str(s)?;
    let rows = v
        .as_array()
        .ok_or_else(|| BadInput("bicharacter must be a JSON matrix".into()))?;
    let values = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| BadInput("bicharacter rows must be arrays".into()))?
                .iter()
                .map(parse_bichar_entry)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AltBicharacter::new(orders.to_vec(), values)?)
}

fn twist(a: &TwistArgs) -> CmdResult {
    let g = parse_group(&a.group)?;
    let sub = parse_subgroup(&g, &a.subgroup)?;
    let basis = AbelianBasis::new(&g, &sub)?;
    let b = parse_bicharacter(&a.bicharacter, basis.orders())?;
    let phi = build_lifted_twist(&g, &sub, &b)?;
    let h = from_group(&g);
    let twist_report = verify_twist(&h, &phi);
    let mut payload = object(json!({
        "group": g.name(),
        "order": g.order(),
        "subgroup": basis.elements,
        "subgroup_generators": basis.generators,
        "basis_orders": basis.orders(),
        "bicharacter": b.values,
        "nondegenerate": b.is_nondegenerate()?,
        "twist_checks": twist_report.checks,
    }));
    let mut code = EXIT_OK;
    let mut citations = vec![(
        "twist".into(),
        "φ = Σ ω(x,y) δ_x ⊗ δ_y lifted from a 2-cocycle on the dual of an abelian subgroup".to_string(),
    )];
    if !twist_report.passed() {
        code = EXIT_NEGATIVE;
    } else {
        let t = twist_hopf(&h, &phi)?;
        let axioms = verify_hopf_axioms(&t);
        if !axioms.passed() {
            code = EXIT_NEGATIVE;
        }
        payload.insert("twisted_axioms".into(), hopf_report_json(&axioms));
        payload.insert("commutative".into(), json!(t.is_commutative()));
        if a.check_cocommutative {
            let direct = t.is_cocommutative();
            payload.insert("cocommutative".into(), json!(direct));
            let criterion = if g.is_normal(&sub) {
                Some(cocommutativity_criterion(&g, &sub, &b)?)
            } else {
                None
            };
            payload.insert("criterion".into(), json!(criterion));
            payload.insert("criterion_agrees".into(), json!(criterion.map(|c| c == direct)));
            citations.push((
                "criterion".into(),
                "a twist lifted from a normal abelian subgroup is cocommutative iff the class of ω is ad G-invariant"
                    .into(),
            ));
        }
        if a.group_likes {
            let surv = surviving_group_likes(&g, &phi)?;
            payload.insert(
                "surviving_group_likes".into(),
                json!({
                    "elements": surv,
                    "count": surv.len(),
                    "note": "computed on the group basis; group-likes outside the group basis are not searched",
                }),
            );
        }
    }
    Ok(Report {
        code,
        command: json!({
            "name": "twist",
            "group": a.group,
            "subgroup": a.subgroup,
            "bicharacter": a.bicharacter,
            "check_cocommutative": a.check_cocommutative,
            "group_likes": a.group_likes,
        }),
        payload,
        citations,
    })
}

// ---- table rendering ----

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn cell(v: &Value) -> String {
    if let Some(m) = v.as_object() {
        if m.len() == 2 && m.contains_key("conductor") && m.contains_key("coeffs") {
            if let Ok(c) = serde_json::from_value::<CycNumber>(v.clone()) {
                return c.to_string();
            }
        }
    }
    match v {
        Value::Array(items) if items.iter().all(|x| is_scalar(x) || x.is_object()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(" | ")
        }
        Value::Array(rows) if rows.iter().all(Value::is_array) => {
            let inner: Vec<String> = rows
                .iter()
                .map(|r| format!("[{}]", cell(r).replace(" | ", ", ")))
                .collect();
            inner.join(" ")
        }
        v if is_scalar(v) => scalar(v),
        other => other.to_string(),
    }
}

fn render_rows(rows: &[Value], indent: &str, out: &mut String) {
    let mut columns: Vec<String> = Vec::new();
    for r in rows {
        if let Value::Object(m) = r {
            for k in m.keys() {
                if !columns.contains(k) {
                    columns.push(k.clone());
                }
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| columns.iter().map(|c| r.get(c).map_or(String::new(), cell)).collect())
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            cells
                .iter()
                .map(|r| r[i].chars().count())
                .chain([c.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |items: &[String]| {
        let parts: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}", w = *w))
            .collect();
        format!("{indent}{}\n", parts.join("  ").trim_end())
    };
    out.push_str(&line(&columns));
    out.push_str(&line(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>()));
    for r in &cells {
        out.push_str(&line(r));
    }
}

fn render_value(key: &str, v: &Value, indent: &str, out: &mut String) {
    match v {
        Value::Object(m) => {
            out.push_str(&format!("{indent}{key}:\n"));
            let deeper = format!("{indent}  ");
            for (k, x) in m {
                render_value(k, x, &deeper, out);
            }
        }
        Value::Array(items) if !items.is_empty() && items.iter().all(|x| x.is_object()) => {
            out.push_str(&format!("{indent}{key}: {} entries\n", items.len()));
            render_rows(items, &format!("{indent}  "), out);
        }
        Value::Array(items) if items.iter().all(is_scalar) => {
            if items.len() > 6 {
                out.push_str(&format!("{indent}{key}: {} entries\n", items.len()));
                for x in items {
                    out.push_str(&format!("{indent}  {}\n", scalar(x)));
                }
            } else {
                out.push_str(&format!("{indent}{key}: {}\n", cell(v)));
            }
        }
        other => out.push_str(&format!("{indent}{key}: {}\n", cell(other))),
    }
}

/// Human-readable rendering of a JSON report.
pub fn render_table(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if k != "command" && k != "citations" {
                    render_value(k, x, "", &mut out);
                }
            }
            if let Some(c) = m.get("citations") {
                render_value("citations", c, "", &mut out);
            }
        }
        other => out.push_str(&cell(other)),
    }
    out
}
