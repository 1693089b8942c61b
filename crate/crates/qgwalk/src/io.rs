//! File formats and the small spec languages shared by the CLI and examples.
//!
//! Three JSON schemas: group descriptors (blocks, Haar weights, sparse Δ/S
//! triplets, dense counit, optional irreps), standalone irrep tables, and
//! Cayley tables. CSV output prints floats with 17 significant digits so a
//! run is reproducible bit for bit.
//!
//! Group specs: `kp`, `sekine:N`, `zn:N`, `cube:N`, `sym:N`, `dihedral:N`,
//! `quaternion`, `sweedler`, `dual:<spec>`, `file:<path>`, `cayley:<path>`.
//!
//! State specs: `uniform`, `counit`, `simple`, `random`,
//! `preset:e2|example1|example2|family|peaked`,
//! `kp:mu=a,b,c,d,e;x=..;y=..;z=..`,
//! `classical:IDX=P;IDX=P;...`,
//! `sekine:x=I,J,P;a=P,Q,RE[,IM];...`,
//! `dualsym:xi=v1,v2,...`.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::blockalg::{c, cr, AlgebraElement, BlockShape, HaarWeights, LinearMap, C64};
use crate::bounds::BoundSeries;
use crate::catalog::{self, CayleyTable, GroupAlgebra};
use crate::error::{Error, Result};
use crate::hopf::{HopfDescriptor, QuantumGroup};
use crate::irreps::{Irrep, IrrepTable};
use crate::walks::{self, Functional, State};

// ---------------------------------------------------------------------------
// JSON schemas
// ---------------------------------------------------------------------------

/// Sparse triplet `(target_index, source_index, re, im)`.
type Triplet = (usize, usize, f64, f64);

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DescriptorFile {
    pub label: String,
    pub blocks: Vec<usize>,
    pub haar_weights: Vec<f64>,
    /// entries of Δ: target pair index `s·dim+t`, source index, re, im
    pub delta: Vec<Triplet>,
    /// dense counit coefficients as `[re, im]` pairs
    pub counit: Vec<[f64; 2]>,
    pub antipode: Vec<Triplet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreps: Option<Vec<IrrepJson>>,
}

/// One irrep: `d` and the `d²` matrix elements as block matrices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IrrepJson {
    pub name: String,
    pub dim: usize,
    /// row-major elements; each element is a list of blocks, each block a
    /// row-major `n×n` matrix of `[re, im]` pairs
    pub elements: Vec<Vec<Vec<Vec<[f64; 2]>>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IrrepTableFile {
    pub irreps: Vec<IrrepJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CayleyFile {
    pub label: String,
    pub order: usize,
    /// row-major: `table[s][t] = s·t`
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn element_to_json(e: &AlgebraElement) -> Vec<Vec<Vec<[f64; 2]>>> {
    e.blocks
        .iter()
        .map(|b| {
            (0..b.nrows())
                .map(|p| (0..b.ncols()).map(|q| [b[(p, q)].re, b[(p, q)].im]).collect())
                .collect()
        })
        .collect()
}

fn element_from_json(shape: &BlockShape, data: &[Vec<Vec<[f64; 2]>>]) -> Result<AlgebraElement> {
    if data.len() != shape.block_count() {
        return Err(Error::Validation("element block count mismatch".into()));
    }
    let mut e = AlgebraElement::zero(shape);
    for (b, block) in data.iter().enumerate() {
        let n = shape.dims()[b];
        if block.len() != n || block.iter().any(|row| row.len() != n) {
            return Err(Error::Validation(format!("block {b} is not {n}x{n}")));
        }
        for p in 0..n {
            for q in 0..n {
                e.blocks[b][(p, q)] = c(block[p][q][0], block[p][q][1]);
            }
        }
    }
    Ok(e)
}

fn irrep_to_json(k: &Irrep) -> IrrepJson {
    IrrepJson {
        name: k.name.clone(),
        dim: k.dim,
        elements: k.elements.iter().map(element_to_json).collect(),
    }
}

fn irrep_from_json(shape: &BlockShape, j: &IrrepJson) -> Result<Irrep> {
    if j.elements.len() != j.dim * j.dim {
        return Err(Error::Validation(format!(
            "irrep {} needs {} elements",
            j.name,
            j.dim * j.dim
        )));
    }
    Ok(Irrep {
        name: j.name.clone(),
        dim: j.dim,
        elements: j
            .elements
            .iter()
            .map(|e| element_from_json(shape, e))
            .collect::<Result<_>>()?,
    })
}

fn map_to_triplets(m: &LinearMap) -> Vec<Triplet> {
    let mut out = Vec::new();
    for j in 0..m.source_dim {
        for i in 0..m.target_dim {
            let v = m.matrix[(i, j)];
            if v.norm_sqr() != 0.0 {
                out.push((i, j, v.re, v.im));
            }
        }
    }
    out
}

fn map_from_triplets(target: usize, source: usize, ts: &[Triplet]) -> Result<LinearMap> {
    let mut m = nalgebra::DMatrix::<C64>::zeros(target, source);
    for &(i, j, re, im) in ts {
        if i >= target || j >= source {
            return Err(Error::Validation(format!("triplet ({i},{j}) out of range")));
        }
        m[(i, j)] += c(re, im);
    }
    Ok(LinearMap::new(m))
}

pub fn descriptor_from_group(qg: &QuantumGroup, irreps: Option<&IrrepTable>) -> DescriptorFile {
    DescriptorFile {
        label: qg.label.clone(),
        blocks: qg.shape.dims().to_vec(),
        haar_weights: qg.haar.weights.clone(),
        delta: map_to_triplets(&qg.delta),
        counit: qg.counit.iter().map(|v| [v.re, v.im]).collect(),
        antipode: map_to_triplets(&qg.antipode),
        irreps: irreps.map(|t| t.irreps.iter().map(irrep_to_json).collect()),
    }
}

pub fn group_from_descriptor(d: &DescriptorFile) -> Result<(QuantumGroup, Option<IrrepTable>)> {
    let shape = BlockShape::new(d.blocks.clone())?;
    let dim = shape.dim();
    if d.counit.len() != dim {
        return Err(Error::Validation(format!(
            "counit has {} entries, dimension is {dim}",
            d.counit.len()
        )));
    }
    let qg = QuantumGroup {
        label: d.label.clone(),
        shape: shape.clone(),
        delta: map_from_triplets(dim * dim, dim, &d.delta)?,
        counit: d.counit.iter().map(|&[re, im]| c(re, im)).collect(),
        antipode: map_from_triplets(dim, dim, &d.antipode)?,
        haar: HaarWeights::new(shape.clone(), d.haar_weights.clone())?,
    };
    qg.validate_structure()?;
    let irreps = match &d.irreps {
        Some(list) => Some(IrrepTable::new(
            shape.clone(),
            list.iter()
                .map(|j| irrep_from_json(&shape, j))
                .collect::<Result<_>>()?,
        )),
        None => None,
    };
    Ok((qg, irreps))
}

pub fn save_descriptor(path: &Path, d: &DescriptorFile) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    serde_json::to_writer_pretty(&mut f, d)?;
    f.write_all(b"\n")?;
    Ok(())
}

pub fn load_descriptor(path: &Path) -> Result<DescriptorFile> {
    Ok(serde_json::from_reader(std::fs::File::open(path)?)?)
}

pub fn load_irrep_table(path: &Path, shape: &BlockShape) -> Result<IrrepTable> {
    let file: IrrepTableFile = serde_json::from_reader(std::fs::File::open(path)?)?;
    Ok(IrrepTable::new(
        shape.clone(),
        file.irreps
            .iter()
            .map(|j| irrep_from_json(shape, j))
            .collect::<Result<_>>()?,
    ))
}

pub fn save_irrep_table(path: &Path, table: &IrrepTable) -> Result<()> {
    let file = IrrepTableFile {
        irreps: table.irreps.iter().map(irrep_to_json).collect(),
    };
    let mut f = std::fs::File::create(path)?;
    serde_json::to_writer_pretty(&mut f, &file)?;
    f.write_all(b"\n")?;
    Ok(())
}

pub fn load_cayley(path: &Path) -> Result<CayleyTable> {
    let file: CayleyFile = serde_json::from_reader(std::fs::File::open(path)?)?;
    if file.table.len() != file.order || file.table.iter().any(|r| r.len() != file.order) {
        return Err(Error::Validation("cayley table is not order×order".into()));
    }
    let product: Vec<usize> = file.table.into_iter().flatten().collect();
    let mut table = CayleyTable::new(product, &file.label)?;
    table.element_labels = file.labels;
    Ok(table)
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// 17 significant digits: round-trip safe for f64.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_series_csv(mut w: impl Write, series: &BoundSeries) -> Result<()> {
    write!(w, "k,tv,l2,sep,ubl,lbl")?;
    for name in &series.irrep_names {
        write!(w, ",{name}")?;
    }
    writeln!(w)?;
    for row in &series.rows {
        write!(
            w,
            "{},{},{},{},{},{}",
            row.k,
            fmt_f64(row.tv),
            fmt_f64(row.l2),
            fmt_f64(row.sep),
            fmt_f64(row.ubl),
            fmt_f64(row.lbl)
        )?;
        for v in &row.contributions {
            write!(w, ",{}", fmt_f64(*v))?;
        }
        writeln!(w)?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Group specs
// ---------------------------------------------------------------------------

/// A resolved group: the descriptor plus whatever extra structure the spec
/// implies (irreps, the classical table, the measure transport of a dual).
pub enum BuiltGroup {
    Quantum {
        group: QuantumGroup,
        irreps: Option<IrrepTable>,
        cayley: Option<CayleyTable>,
        group_algebra: Option<GroupAlgebra>,
        /// n parameter for families that have one (`zn`, `cube`, `sekine`)
        family_n: Option<usize>,
        kind: GroupKind,
    },
    /// A Hopf descriptor that is not a quantum group (verification only).
    Hopf(HopfDescriptor),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Kp,
    Sekine,
    Zn,
    Cube,
    Classical,
    DualGroup,
    File,
}

impl BuiltGroup {
    pub fn group(&self) -> Result<&QuantumGroup> {
        match self {
            BuiltGroup::Quantum { group, .. } => Ok(group),
            BuiltGroup::Hopf(d) => Err(Error::Unsupported(format!(
                "{} is a Hopf descriptor, not a quantum group",
                d.label
            ))),
        }
    }

    pub fn label(&self) -> &str {
        match self {
            BuiltGroup::Quantum { group, .. } => &group.label,
            BuiltGroup::Hopf(d) => &d.label,
        }
    }
}

fn parse_param(spec: &str, name: &str) -> Result<usize> {
    spec.parse::<usize>()
        .map_err(|_| Error::Parse(format!("{name} needs an integer parameter, got '{spec}'")))
}

/// Resolve a group spec string. `irreps_path` overrides or supplies the table.
pub fn build_group(spec: &str, irreps_path: Option<&Path>) -> Result<BuiltGroup> {
    let (head, rest) = match spec.split_once(':') {
        Some((h, r)) => (h, Some(r)),
        None => (spec, None),
    };
    let built = match (head, rest) {
        ("kp", None) => {
            let (group, irreps) = catalog::kac_paljutkin()?;
            BuiltGroup::Quantum {
                group,
                irreps: Some(irreps),
                cayley: None,
                group_algebra: None,
                family_n: None,
                kind: GroupKind::Kp,
            }
        }
        ("sekine", Some(p)) => {
            let n = parse_param(p, "sekine")?;
            let group = catalog::sekine(n)?;
            let irreps = catalog::sekine_irreps(n).ok();
            BuiltGroup::Quantum {
                group,
                irreps,
                cayley: None,
                group_algebra: None,
                family_n: Some(n),
                kind: GroupKind::Sekine,
            }
        }
        ("zn", Some(p)) => {
            let n = parse_param(p, "zn")?;
            let table = catalog::cyclic(n)?;
            let group = catalog::function_algebra(&table)?;
            let irreps = catalog::classical_irreps(&group, &table, None)?;
            BuiltGroup::Quantum {
                group,
                irreps: Some(irreps),
                cayley: Some(table),
                group_algebra: None,
                family_n: Some(n),
                kind: GroupKind::Zn,
            }
        }
        ("cube", Some(p)) => {
            let n = parse_param(p, "cube")?;
            let table = catalog::z2_power(n)?;
            let group = catalog::function_algebra(&table)?;
            let irreps = catalog::classical_irreps(&group, &table, None)?;
            BuiltGroup::Quantum {
                group,
                irreps: Some(irreps),
                cayley: Some(table),
                group_algebra: None,
                family_n: Some(n),
                kind: GroupKind::Cube,
            }
        }
        ("sym", Some(p)) => classical_from_table(catalog::symmetric(parse_param(p, "sym")?)?)?,
        ("dihedral", Some(p)) => {
            classical_from_table(catalog::dihedral(parse_param(p, "dihedral")?)?)?
        }
        ("quaternion", None) => classical_from_table(catalog::quaternion()?)?,
        ("sweedler", None) => BuiltGroup::Hopf(catalog::sweedler()),
        ("dual", Some(inner)) => {
            let table = classical_table_from_spec(inner)?;
            let ga = catalog::group_algebra(&table)?;
            BuiltGroup::Quantum {
                group: ga.algebra.clone(),
                irreps: Some(ga.irreps()),
                cayley: Some(table),
                group_algebra: Some(ga),
                family_n: None,
                kind: GroupKind::DualGroup,
            }
        }
        ("file", Some(p)) => {
            let d = load_descriptor(Path::new(p))?;
            let (group, irreps) = group_from_descriptor(&d)?;
            BuiltGroup::Quantum {
                group,
                irreps,
                cayley: None,
                group_algebra: None,
                family_n: None,
                kind: GroupKind::File,
            }
        }
        ("cayley", Some(p)) => classical_from_table(load_cayley(Path::new(p))?)?,
        _ => {
            return Err(Error::Parse(format!(
                "unknown group spec '{spec}' (try kp, sekine:N, zn:N, cube:N, sym:N, \
                 dihedral:N, quaternion, sweedler, dual:<spec>, file:<path>, cayley:<path>)"
            )))
        }
    };
    // a user-supplied irrep table replaces whatever the builder produced
    if let Some(path) = irreps_path {
        if let BuiltGroup::Quantum {
            group,
            irreps,
            ..
        } = &built
        {
            let table = load_irrep_table(path, &group.shape)?;
            table.validate(group)?;
            let _ = irreps;
            if let BuiltGroup::Quantum {
                group,
                cayley,
                group_algebra,
                family_n,
                kind,
                ..
            } = built
            {
                return Ok(BuiltGroup::Quantum {
                    group,
                    irreps: Some(table),
                    cayley,
                    group_algebra,
                    family_n,
                    kind,
                });
            }
        } else {
            return Err(Error::Unsupported(
                "irrep tables do not apply to Hopf descriptors".into(),
            ));
        }
    }
    Ok(built)
}

fn classical_table_from_spec(spec: &str) -> Result<CayleyTable> {
    let (head, rest) = match spec.split_once(':') {
        Some((h, r)) => (h, Some(r)),
        None => (spec, None),
    };
    match (head, rest) {
        ("zn", Some(p)) => catalog::cyclic(parse_param(p, "zn")?),
        ("cube", Some(p)) => catalog::z2_power(parse_param(p, "cube")?),
        ("sym", Some(p)) => catalog::symmetric(parse_param(p, "sym")?),
        ("dihedral", Some(p)) => catalog::dihedral(parse_param(p, "dihedral")?),
        ("quaternion", None) => catalog::quaternion(),
        ("cayley", Some(p)) => load_cayley(Path::new(p)),
        _ => Err(Error::Parse(format!(
            "dual:<spec> needs a classical group spec, got '{spec}'"
        ))),
    }
}

fn classical_from_table(table: CayleyTable) -> Result<BuiltGroup> {
    let group = catalog::function_algebra(&table)?;
    let irreps = if table.is_abelian() {
        Some(catalog::classical_irreps(&group, &table, None)?)
    } else {
        None
    };
    Ok(BuiltGroup::Quantum {
        group,
        irreps,
        cayley: Some(table),
        group_algebra: None,
        family_n: None,
        kind: GroupKind::Classical,
    })
}

// ---------------------------------------------------------------------------
// State specs
// ---------------------------------------------------------------------------

fn parse_f64(s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::Parse(format!("expected a number, got '{s}'")))
}

/// Resolve a state spec string against a built group.
pub fn build_state(spec: &str, built: &BuiltGroup, seed: u64) -> Result<State> {
    let BuiltGroup::Quantum {
        group,
        cayley,
        group_algebra,
        family_n,
        kind,
        ..
    } = built
    else {
        return Err(Error::Unsupported(
            "states live on quantum groups, not raw Hopf descriptors".into(),
        ));
    };
    let (head, rest) = match spec.split_once(':') {
        Some((h, r)) => (h, Some(r)),
        None => (spec, None),
    };
    match (head, rest) {
        ("uniform", None) => Ok(State::haar(group)),
        ("counit", None) => Ok(State::counit(group)),
        ("random", None) => {
            let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
            Ok(walks::random_state(group, &mut rng))
        }
        ("simple", None) => match kind {
            GroupKind::Zn => {
                let n = family_n.expect("zn has n");
                if n == 1 {
                    return State::classical(group, &[1.0]);
                }
                let mut probs = vec![0.0; n];
                probs[1] += 0.5;
                probs[n - 1] += 0.5;
                State::classical(group, &probs)
            }
            GroupKind::Cube => {
                let n = family_n.expect("cube has n");
                let order = 1usize << n;
                let mut probs = vec![0.0; order];
                let w = 1.0 / (n as f64 + 1.0);
                probs[0] = w;
                for bit in 0..n {
                    probs[1 << bit] = w;
                }
                State::classical(group, &probs)
            }
            _ => Err(Error::Parse(
                "state 'simple' is defined for zn:N and cube:N".into(),
            )),
        },
        ("preset", Some(name)) => match (kind, name) {
            (GroupKind::Kp, "e2") => walks::kp_state(group, [0.0, 1.0, 0.0, 0.0, 0.0], 0.0, 0.0, 0.0),
            (GroupKind::Kp, "example1") => {
                walks::kp_state(group, [0.0, 0.25, 0.25, 0.25, 0.25], 0.0, 0.0, 0.0)
            }
            (GroupKind::Kp, "example2") => {
                walks::kp_state(group, [0.0, 0.0, 0.25, 0.25, 0.5], 1.0, 0.0, 0.0)
            }
            (GroupKind::Sekine, "family") => {
                walks::sekine_walk_state(group, family_n.expect("sekine has n"))
            }
            (GroupKind::DualGroup, "peaked") => {
                let ga = group_algebra.as_ref().expect("dual group keeps transport");
                let table = cayley.as_ref().expect("dual group keeps table");
                if !table.label.starts_with('S') {
                    return Err(Error::Parse(
                        "preset:peaked needs a dual:sym:N group".into(),
                    ));
                }
                let n = table
                    .label
                    .trim_start_matches('S')
                    .parse::<usize>()
                    .map_err(|_| Error::Parse("cannot read n from the table label".into()))?;
                let (_, perms) = catalog::symmetric_with_permutations(n)?;
                let xi = dual_sn_unit_vector(n);
                walks::permutation_vector_state(ga, &perms, &xi)
            }
            _ => Err(Error::Parse(format!(
                "preset '{name}' is not defined for this group"
            ))),
        },
        ("kp", Some(args)) => {
            if *kind != GroupKind::Kp {
                return Err(Error::Parse("kp:... states need the kp group".into()));
            }
            let mut mu = [0.0f64; 5];
            let (mut x, mut y, mut z) = (0.0, 0.0, 0.0);
            let mut saw_mu = false;
            for kv in args.split(';') {
                let (key, value) = kv
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("expected key=value, got '{kv}'")))?;
                match key.trim() {
                    "mu" => {
                        let parts: Vec<&str> = value.split(',').collect();
                        if parts.len() != 5 {
                            return Err(Error::Parse("mu needs five comma-separated weights".into()));
                        }
                        for (i, p) in parts.iter().enumerate() {
                            mu[i] = parse_f64(p)?;
                        }
                        saw_mu = true;
                    }
                    "x" => x = parse_f64(value)?,
                    "y" => y = parse_f64(value)?,
                    "z" => z = parse_f64(value)?,
                    other => return Err(Error::Parse(format!("unknown kp key '{other}'"))),
                }
            }
            if !saw_mu {
                return Err(Error::Parse("kp state needs mu=...".into()));
            }
            walks::kp_state(group, mu, x, y, z)
        }
        ("classical", Some(args)) => {
            if *kind == GroupKind::DualGroup {
                return Err(Error::Parse(
                    "classical:... point masses live on function algebras; \
                     use dualsym:xi=... on a dual group"
                        .into(),
                ));
            }
            let table = cayley
                .as_ref()
                .ok_or_else(|| Error::Parse("classical:... needs a classical group".into()))?;
            let mut probs = vec![0.0f64; table.order];
            for kv in args.split(';') {
                let (idx, p) = kv
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("expected IDX=P, got '{kv}'")))?;
                let idx: usize = idx
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad element index '{idx}'")))?;
                if idx >= table.order {
                    return Err(Error::Parse(format!("element index {idx} out of range")));
                }
                probs[idx] += parse_f64(p)?;
            }
            State::classical(group, &probs)
        }
        ("sekine", Some(args)) => {
            if *kind != GroupKind::Sekine {
                return Err(Error::Parse("sekine:... states need a sekine group".into()));
            }
            let n = family_n.expect("sekine has n");
            let mut coeffs = vec![cr(0.0); group.dim()];
            for kv in args.split(';') {
                let (key, value) = kv
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("expected key=value, got '{kv}'")))?;
                let parts: Vec<&str> = value.split(',').collect();
                match key.trim() {
                    "x" => {
                        if parts.len() != 3 {
                            return Err(Error::Parse("x needs I,J,P".into()));
                        }
                        let i: usize = parts[0].trim().parse().map_err(|_| {
                            Error::Parse(format!("bad index '{}'", parts[0]))
                        })?;
                        let j: usize = parts[1].trim().parse().map_err(|_| {
                            Error::Parse(format!("bad index '{}'", parts[1]))
                        })?;
                        if i >= n || j >= n {
                            return Err(Error::Parse("one-dimensional index out of range".into()));
                        }
                        coeffs[i * n + j] += cr(parse_f64(parts[2])?);
                    }
                    "a" => {
                        if parts.len() != 3 && parts.len() != 4 {
                            return Err(Error::Parse("a needs P,Q,RE[,IM]".into()));
                        }
                        let p: usize = parts[0].trim().parse().map_err(|_| {
                            Error::Parse(format!("bad index '{}'", parts[0]))
                        })?;
                        let q: usize = parts[1].trim().parse().map_err(|_| {
                            Error::Parse(format!("bad index '{}'", parts[1]))
                        })?;
                        let re = parse_f64(parts[2])?;
                        let im = if parts.len() == 4 { parse_f64(parts[3])? } else { 0.0 };
                        // matrix-unit labels are 1-based with 0 ≡ n
                        coeffs[group.shape.index_of(n * n, p % n, q % n)] += c(re, im);
                    }
                    other => return Err(Error::Parse(format!("unknown sekine key '{other}'"))),
                }
            }
            State::new(Functional::from_coeffs(group, coeffs)?, group)
        }
        ("dualsym", Some(args)) => {
            let ga = group_algebra
                .as_ref()
                .ok_or_else(|| Error::Parse("dualsym:... needs a dual:sym:N group".into()))?;
            let (key, value) = args
                .split_once('=')
                .ok_or_else(|| Error::Parse("expected xi=v1,v2,...".into()))?;
            if key.trim() != "xi" {
                return Err(Error::Parse(format!("unknown dualsym key '{key}'")));
            }
            let xi: Vec<f64> = value
                .split(',')
                .map(parse_f64)
                .collect::<Result<_>>()?;
            let n = xi.len();
            let (_, perms) = catalog::symmetric_with_permutations(n)?;
            if perms.len() != ga.table.order {
                return Err(Error::Parse(format!(
                    "xi has {n} entries but the group is not S{n}"
                )));
            }
            walks::permutation_vector_state(ga, &perms, &xi)
        }
        _ => Err(Error::Parse(format!(
            "unknown state spec '{spec}' (try uniform, counit, simple, random, preset:..., \
             kp:..., classical:..., sekine:..., dualsym:...)"
        ))),
    }
}

/// The unit vector `ξᵢ = √(n^{n−i}(n−1)/(nⁿ−1))` of the dual symmetric-group
/// walk (1-based `i`).
pub fn dual_sn_unit_vector(n: usize) -> Vec<f64> {
    let nf = n as f64;
    let nn = nf.powi(n as i32);
    (1..=n)
        .map(|i| (nf.powi((n - i) as i32) * (nf - 1.0) / (nn - 1.0)).sqrt())
        .collect()
}
