use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use twisted_double::centre::{decomposition_string, Centre, CentreCharacter};
use twisted_double::cochain::{check_pca_identities, cohomology, hs_check, theta_d3, CochainJson};
use twisted_double::etale::{etale_enumerate, lagrangian_character, lagrangian_data, DatumJson, LagrangianDatum};
use twisted_double::group::{builtin_group, GroupJson, GroupSpec};
use twisted_double::modular::{invariant_report, invariants_of, ProductCentre, MODULAR_BOUND};
use twisted_double::{Cochain, Cyc, Error, GroupTable, Subgroup};

use crate::{Command, Config, Format};

/// Default bound on |G| outside the modular-invariant command.
const DEFAULT_MAX_ORDER: usize = 64;

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, code: 0 }
    }
}

/// 2 for input errors, 3 for resource bounds, 1 otherwise.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<std::io::Error>().is_some() || e.downcast_ref::<serde_json::Error>().is_some() {
        return 2;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::Parse(_)) | Some(Error::MalformedTable) | Some(Error::NoIdentity) | Some(Error::NoInverse(_))
        | Some(Error::NotAssociative(..)) | Some(Error::NotAPermutationRow(_)) => 2,
        Some(Error::SizeLimitExceeded { .. }) | Some(Error::Overflow) => 3,
        Some(_) => 1,
        None => 2,
    }
}

pub fn run(cfg: &Config, cmd: &Command) -> Result<Output> {
    let bound = match cmd {
        Command::ModularInvariants => cfg.max_order.unwrap_or(MODULAR_BOUND),
        _ => cfg.max_order.unwrap_or(DEFAULT_MAX_ORDER),
    };
    let group = load_group(&cfg.group, bound)?;
    match cmd {
        Command::Cohomology { degree } => cmd_cohomology(cfg, &group, *degree),
        Command::CheckCocycle { sample } => cmd_check_cocycle(cfg, &group, *sample),
        Command::Simples => cmd_simples(cfg, &Centre::new(&load_cocycle(cfg, &group)?)?),
        Command::CharTable => cmd_char_table(cfg, &Centre::new(&load_cocycle(cfg, &group)?)?),
        Command::Lagrangians => cmd_lagrangians(cfg, &Centre::new(&load_cocycle(cfg, &group)?)?),
        Command::Etale => cmd_etale(cfg, &load_cocycle(cfg, &group)?),
        Command::ModularInvariants => cmd_modular_invariants(cfg, &load_cocycle(cfg, &group)?, bound),
        Command::Decompose { character_file, datum_file, product } => {
            let c = Centre::new(&load_cocycle(cfg, &group)?)?;
            let chi = if let Some(p) = character_file {
                read_character(&c, p)?
            } else if let Some(p) = datum_file {
                let j: DatumJson = serde_json::from_str(&read(p)?)?;
                lagrangian_character(&c, &LagrangianDatum::from_json(&group, &j)?)?
            } else if let Some(s) = product {
                let (i, j) = s.split_once(',').ok_or_else(|| Error::Parse(format!("expected i,j, got '{s}'")))?;
                let idx = |t: &str| -> Result<&CentreCharacter> {
                    let k: usize = t.trim().parse().map_err(|_| Error::Parse(format!("bad index '{t}'")))?;
                    c.simple_characters().get(k).ok_or_else(|| Error::Parse(format!("no simple {k}")).into())
                };
                c.product(idx(i)?, idx(j)?)?
            } else {
                bail!(Error::Parse("decompose needs --character-file, --datum-file or --product".into()))
            };
            cmd_decompose(cfg, &c, &chi)
        }
    }
}

fn read(p: &Path) -> Result<String> {
    std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
}

fn load_group(spec: &str, bound: usize) -> Result<Arc<GroupTable>> {
    let g = match spec.parse::<GroupSpec>() {
        Ok(s) => {
            if s.order() > bound {
                bail!(Error::SizeLimitExceeded { what: "group order", size: s.order(), limit: bound });
            }
            builtin_group(&s)?
        }
        Err(e) if !Path::new(spec).exists() => return Err(e.into()),
        Err(_) => {
            let j: GroupJson = serde_json::from_str(&read(Path::new(spec))?)?;
            GroupTable::from_json(j)?
        }
    };
    if g.order() > bound {
        bail!(Error::SizeLimitExceeded { what: "group order", size: g.order(), limit: bound });
    }
    Ok(Arc::new(g))
}

fn load_cocycle(cfg: &Config, g: &Arc<GroupTable>) -> Result<Cochain> {
    if let Some(p) = &cfg.cocycle_file {
        let j: CochainJson = serde_json::from_str(&read(p)?)?;
        return Ok(Cochain::from_json(g.clone(), &j)?);
    }
    let s = cfg.cocycle.trim();
    let int = |t: &str| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad cocycle spec '{s}'")));
    if s == "trivial" {
        return Ok(Cochain::zero(g.clone(), 3));
    }
    if let Some(k) = s.strip_prefix("theta3:") {
        if cfg.group.parse::<GroupSpec>().ok() != Some(GroupSpec::Dihedral(3)) {
            bail!(Error::Parse("theta3 needs --group dihedral:3".into()));
        }
        return Ok(theta_d3(g, int(k)?));
    }
    if let Some(k) = s.strip_prefix("class:") {
        let all = cohomology(g, 3)?.all_classes();
        if all.is_empty() {
            return Ok(Cochain::zero(g.clone(), 3));
        }
        let k = int(k)?.rem_euclid(all.len() as i64) as usize;
        return Ok(all[k].clone());
    }
    bail!(Error::Parse(format!("unknown cocycle spec '{s}'")))
}

fn json_out<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn factors(inv: &[u64]) -> String {
    if inv.is_empty() {
        "trivial".into()
    } else {
        inv.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" x ")
    }
}

fn cmd_cohomology(cfg: &Config, g: &Arc<GroupTable>, degree: usize) -> Result<Output> {
    let h = cohomology(g, degree)?;
    Ok(Output::ok(match cfg.format {
        Format::Table => format!("{}\n", factors(&h.invariants)),
        Format::Json => json_out(&json!({"degree": degree, "invariants": h.invariants, "group": factors(&h.invariants)})),
        Format::Csv => format!(
            "degree,invariants\n{degree},{}\n",
            h.invariants.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
        ),
    }))
}

fn cmd_check_cocycle(cfg: &Config, g: &Arc<GroupTable>, sample: Option<usize>) -> Result<Output> {
    let alpha = match &cfg.cocycle_file {
        Some(p) => {
            let j: CochainJson = serde_json::from_str(&read(p)?)?;
            Cochain::from_json(g.clone(), &j)?
        }
        None => load_cocycle(cfg, g)?,
    };
    let n = g.order();
    let d = alpha.degree();
    let failure: Option<Vec<usize>> = match sample {
        None => alpha.cocycle_failure(),
        Some(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            (0..k)
                .map(|_| (0..=d).map(|_| rng.gen_range(0..n)).collect::<Vec<usize>>())
                .find(|t| !alpha.coboundary_at(t).is_zero())
        }
    };
    let cocycle = failure.is_none();
    let (pca, hs) = if cocycle && d == 3 { (Some(check_pca_identities(&alpha)), Some(hs_check(&alpha))) } else { (None, None) };
    let pass = cocycle && pca != Some(false) && hs != Some(false);
    let names = |t: &[usize]| t.iter().map(|&x| g.name(x).to_string()).collect::<Vec<_>>();
    let text = match cfg.format {
        Format::Json => json_out(&json!({
            "pass": pass,
            "cocycle": cocycle,
            "failure": failure.as_ref().map(|t| names(t)),
            "transgression_identities": pca,
            "double_complex": hs,
            "sampled": sample,
        })),
        Format::Csv => format!(
            "pass,cocycle,failure,transgression_identities,double_complex\n{pass},{cocycle},{},{},{}\n",
            failure.as_ref().map(|t| names(t).join(" ")).unwrap_or_default(),
            pca.map(|b| b.to_string()).unwrap_or_default(),
            hs.map(|b| b.to_string()).unwrap_or_default()
        ),
        Format::Table => {
            let mut s = String::new();
            match &failure {
                None => writeln!(s, "cocycle identity: pass").unwrap(),
                Some(t) => writeln!(s, "cocycle identity: fail at ({})", names(t).join(",")).unwrap(),
            }
            let word = |b: bool| if b { "pass" } else { "fail" };
            if let Some(b) = pca {
                writeln!(s, "transgression identities: {}", word(b)).unwrap();
            }
            if let Some(b) = hs {
                writeln!(s, "double complex: {}", word(b)).unwrap();
            }
            writeln!(s, "{}", if pass { "PASS" } else { "FAIL" }).unwrap();
            s
        }
    };
    Ok(Output { text, code: if pass { 0 } else { 1 } })
}

fn cmd_simples(cfg: &Config, c: &Centre) -> Result<Output> {
    let names = c.simple_names(cfg.ascii);
    let dims = c.dimensions();
    let g = c.group();
    let rows: Vec<(String, String, usize, u64)> = c
        .simple_objects()
        .iter()
        .zip(names)
        .zip(dims)
        .map(|((l, n), d)| (n, g.name(l.class_rep).to_string(), l.char_index, d))
        .collect();
    Ok(Output::ok(match cfg.format {
        Format::Json => json_out(
            &rows
                .iter()
                .map(|(n, f, i, d)| json!({"name": n, "class": f, "char_index": i, "dimension": d}))
                .collect::<Vec<_>>(),
        ),
        Format::Csv => {
            let mut s = String::from("name,class,char_index,dimension\n");
            for (n, f, i, d) in &rows {
                writeln!(s, "{n},{f},{i},{d}").unwrap();
            }
            s
        }
        Format::Table => {
            let mut s = String::new();
            for (n, f, i, d) in &rows {
                writeln!(s, "{n}  class {f}  index {i}  dim {d}").unwrap();
            }
            s
        }
    }))
}

fn render(cfg: &Config, c: &Centre, rows: &[(String, &CentreCharacter)]) -> String {
    match cfg.format {
        Format::Table => c.table_text(rows, cfg.ascii),
        Format::Csv => c.table_csv(rows, cfg.ascii),
        Format::Json => json_out(&c.table_json(rows, cfg.ascii)),
    }
}

fn cmd_char_table(cfg: &Config, c: &Centre) -> Result<Output> {
    let names = c.simple_names(cfg.ascii);
    let rows: Vec<(String, &CentreCharacter)> = names.into_iter().zip(c.simple_characters()).collect();
    Ok(Output::ok(render(cfg, c, &rows)))
}

fn subgroup_name(h: &Subgroup) -> String {
    let g = h.parent();
    format!("{{{}}}", h.elements().iter().map(|&x| g.name(x)).collect::<Vec<_>>().join(","))
}

#[derive(Serialize, Deserialize)]
struct LagrangianJson {
    label: String,
    datum: DatumJson,
    decomposition: String,
    multiplicities: Vec<u64>,
}

fn cmd_lagrangians(cfg: &Config, c: &Centre) -> Result<Output> {
    let data = lagrangian_data(c.alpha())?;
    let chars = data.iter().map(|d| lagrangian_character(c, d)).collect::<twisted_double::Result<Vec<_>>>()?;
    let mults = chars.iter().map(|x| c.decompose(x)).collect::<twisted_double::Result<Vec<_>>>()?;
    let labels: Vec<String> = (0..data.len()).map(|i| format!("L{i}")).collect();
    let rows: Vec<(String, &CentreCharacter)> = labels.iter().cloned().zip(chars.iter()).collect();
    Ok(Output::ok(match cfg.format {
        Format::Json => json_out(&json!({
            "table": c.table_json(&rows, cfg.ascii),
            "lagrangians": data.iter().zip(&mults).zip(&labels).map(|((d, m), l)| LagrangianJson {
                label: l.clone(),
                datum: d.to_json(),
                decomposition: decomposition_string(m, cfg.ascii),
                multiplicities: m.clone(),
            }).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = c.table_csv(&rows, cfg.ascii);
            s.push_str("\nlabel,H,gamma_trivial,decomposition\n");
            for ((d, m), l) in data.iter().zip(&mults).zip(&labels) {
                writeln!(s, "{l},\"{}\",{},{}", subgroup_name(&d.h), d.gamma.is_zero(), decomposition_string(m, cfg.ascii)).unwrap();
            }
            s
        }
        Format::Table => {
            let mut s = c.table_text(&rows, cfg.ascii);
            s.push('\n');
            for ((d, m), l) in data.iter().zip(&mults).zip(&labels) {
                let gamma = if d.gamma.is_zero() { "0" } else { "nontrivial" };
                writeln!(s, "{l}  H={}  gamma={gamma}  {}", subgroup_name(&d.h), decomposition_string(m, cfg.ascii)).unwrap();
            }
            s
        }
    }))
}

fn cmd_etale(cfg: &Config, alpha: &Cochain) -> Result<Output> {
    let data = etale_enumerate(alpha)?;
    Ok(Output::ok(match cfg.format {
        Format::Json => json_out(&data.iter().map(|d| d.to_json()).collect::<Vec<_>>()),
        Format::Csv => {
            let mut s = String::from("index,H,F,gamma_trivial,epsilon_trivial\n");
            for (i, d) in data.iter().enumerate() {
                let eps0 = d.epsilon.to_json().is_empty();
                writeln!(s, "{i},\"{}\",\"{}\",{},{eps0}", subgroup_name(&d.h), subgroup_name(&d.f), d.gamma.is_zero()).unwrap();
            }
            s
        }
        Format::Table => {
            let mut s = String::new();
            for (i, d) in data.iter().enumerate() {
                let j = d.to_json();
                writeln!(
                    s,
                    "A{i}  H={}  F={}  gamma: {} nonzero  epsilon: {} nonzero",
                    subgroup_name(&d.h),
                    subgroup_name(&d.f),
                    j.gamma.len(),
                    j.epsilon.len()
                )
                .unwrap();
            }
            writeln!(s, "{} data", data.len()).unwrap();
            s
        }
    }))
}

fn cmd_modular_invariants(cfg: &Config, alpha: &Cochain, bound: usize) -> Result<Output> {
    let pc = ProductCentre::bounded(alpha, bound)?;
    let invs = invariants_of(&pc)?;
    let report = invariant_report(&pc, &invs, cfg.ascii);
    Ok(Output::ok(match cfg.format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Csv => report.to_csv(),
        Format::Table => {
            let mut s = String::new();
            let w = report.simples.iter().map(|n| n.chars().count()).max().unwrap_or(1);
            for (k, (m, j)) in invs.iter().zip(&report.invariants).enumerate() {
                let gamma = if j.gamma.is_empty() { "0" } else { "nontrivial" };
                writeln!(s, "Z{k}  U={}  |U|={}  gamma={gamma}", subgroup_name(&m.datum.h), m.datum.h.order()).unwrap();
                for (name, row) in report.simples.iter().zip(&m.matrix) {
                    let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    writeln!(s, "  {}{} | {}", " ".repeat(w - name.chars().count()), name, cells.join(" ")).unwrap();
                }
                s.push('\n');
            }
            writeln!(s, "{} invariants", invs.len()).unwrap();
            s
        }
    }))
}

#[derive(Deserialize)]
struct CharacterFile {
    order: u64,
    values: Vec<Vec<serde_json::Value>>,
}

fn rational(v: &serde_json::Value) -> Result<BigRational> {
    let s = match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Number(n) => n.to_string(),
        _ => bail!(Error::Parse(format!("bad coefficient {v}"))),
    };
    let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|_| anyhow!(Error::Parse(format!("bad coefficient {s}"))));
    Ok(match s.split_once('/') {
        Some((a, b)) => {
            let b = parse(b)?;
            if b == BigInt::from(0) {
                bail!(Error::Parse(format!("zero denominator in {s}")));
            }
            BigRational::new(parse(a)?, b)
        }
        None => BigRational::from_integer(parse(&s)?),
    })
}

fn read_character(c: &Centre, p: &Path) -> Result<CentreCharacter> {
    let f: CharacterFile = serde_json::from_str(&read(p)?)?;
    if f.order == 0 {
        bail!(Error::Parse("order must be positive".into()));
    }
    let values = f
        .values
        .iter()
        .map(|coeffs| Ok(Cyc::from_coeffs(coeffs.iter().map(rational).collect::<Result<Vec<_>>>()?, f.order)))
        .collect::<Result<Vec<Cyc>>>()?;
    Ok(c.character_from_display_values(values)?)
}

fn cmd_decompose(cfg: &Config, c: &Centre, chi: &CentreCharacter) -> Result<Output> {
    let m = c.decompose(chi)?;
    let s = decomposition_string(&m, cfg.ascii);
    Ok(Output::ok(match cfg.format {
        Format::Json => json_out(&json!({"decomposition": s, "multiplicities": m})),
        Format::Csv => format!("decomposition,{}\n{s},{}\n", c.simple_names(cfg.ascii).join(","), m.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")),
        Format::Table => format!("{s}\n"),
    }))
}
