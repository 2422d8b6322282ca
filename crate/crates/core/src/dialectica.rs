//! A category of degree-valued relations over finite sets.
//!
//! Objects are triples `(U, X, α)` with `α : U × X → [0,1]`; a morphism
//! `(U, X, α) → (V, Y, β)` is a pair of total functions `f : U → V`,
//! `g : Y → X` (the open map runs backwards) satisfying
//! `α(u, g(y)) ≤ β(f(u), y)` for every `u` and `y`.
//!
//! Tensor, internal hom, products and coproducts are all computed as
//! explicit finite tables. Function-space carriers are materialized as
//! total-function tables in a fixed lexicographic order, so objects built
//! twice compare equal and every construction is deterministic.
//!
//! Every morphism produced here — composites, identities, projections,
//! injections, curried and uncurried maps — is re-verified against the
//! defining inequality before being returned.

use thiserror::Error;

use crate::degrees::Degree;

/// Default gate on enumerated sizes (table cells or candidate counts).
pub const DEFAULT_SIZE_BOUND: usize = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DialError {
    #[error("points and opens must be nonempty")]
    EmptyCarrier,
    #[error("relation table has {got} entries, expected {want}")]
    TableSizeMismatch { got: usize, want: usize },
    #[error("duplicate name {0:?}")]
    DuplicateName(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("duplicate entry for ({point:?}, {open:?})")]
    DuplicateEntry { point: String, open: String },
    #[error("missing entry for ({point:?}, {open:?})")]
    MissingEntry { point: String, open: String },
    #[error("map is not total: {0:?} has no image")]
    NotTotal(String),
    #[error("morphism condition fails at ({point:?}, {open:?}): {lhs} > {rhs}")]
    ConditionViolated {
        point: String,
        open: String,
        lhs: Degree,
        rhs: Degree,
    },
    #[error("target of the first morphism differs from source of the second")]
    SourceTargetMismatch,
    #[error("construction size {size} exceeds bound {bound}")]
    SizeBoundExceeded { size: usize, bound: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

/// A total table `(point, open) → Degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyRelation {
    rows: usize,
    cols: usize,
    table: Vec<Degree>,
}

impl FuzzyRelation {
    pub fn new(rows: usize, cols: usize, table: Vec<Degree>) -> Result<Self, DialError> {
        if table.len() != rows * cols {
            return Err(DialError::TableSizeMismatch {
                got: table.len(),
                want: rows * cols,
            });
        }
        Ok(FuzzyRelation { rows, cols, table })
    }

    pub fn constant(rows: usize, cols: usize, value: Degree) -> Self {
        FuzzyRelation {
            rows,
            cols,
            table: vec![value; rows * cols],
        }
    }

    /// Builds the table from `(row, col, degree)` entries, requiring each
    /// cell to be set exactly once.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        row_names: &[String],
        col_names: &[String],
        entries: &[(usize, usize, Degree)],
    ) -> Result<Self, DialError> {
        let mut table: Vec<Option<Degree>> = vec![None; rows * cols];
        for &(r, c, d) in entries {
            let cell = &mut table[r * cols + c];
            if cell.is_some() {
                return Err(DialError::DuplicateEntry {
                    point: row_names[r].clone(),
                    open: col_names[c].clone(),
                });
            }
            *cell = Some(d);
        }
        let table = table
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| DialError::MissingEntry {
                    point: row_names[i / cols].clone(),
                    open: col_names[i % cols].clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FuzzyRelation { rows, cols, table })
    }

    pub fn get(&self, row: usize, col: usize) -> Degree {
        self.table[row * self.cols + col]
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

/// An object `(U, X, α)`. Equality is structural: same names in the same
/// order, same table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DialObject {
    points: Vec<String>,
    opens: Vec<String>,
    alpha: FuzzyRelation,
}

impl DialObject {
    pub fn new(
        points: Vec<String>,
        opens: Vec<String>,
        alpha: FuzzyRelation,
    ) -> Result<Self, DialError> {
        if points.is_empty() || opens.is_empty() {
            return Err(DialError::EmptyCarrier);
        }
        check_distinct(&points)?;
        check_distinct(&opens)?;
        if alpha.rows() != points.len() || alpha.cols() != opens.len() {
            return Err(DialError::TableSizeMismatch {
                got: alpha.rows() * alpha.cols(),
                want: points.len() * opens.len(),
            });
        }
        Ok(DialObject {
            points,
            opens,
            alpha,
        })
    }

    /// Convenience constructor from a row-major degree table.
    pub fn from_table(
        points: &[&str],
        opens: &[&str],
        table: &[Degree],
    ) -> Result<Self, DialError> {
        let alpha = FuzzyRelation::new(points.len(), opens.len(), table.to_vec())?;
        DialObject::new(
            points.iter().map(|s| s.to_string()).collect(),
            opens.iter().map(|s| s.to_string()).collect(),
            alpha,
        )
    }

    /// The one-point, one-open object with constant degree 1; the unit
    /// for the tensor.
    pub fn unit() -> Self {
        DialObject {
            points: vec!["*".to_string()],
            opens: vec!["*".to_string()],
            alpha: FuzzyRelation::constant(1, 1, Degree::one()),
        }
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn opens(&self) -> &[String] {
        &self.opens
    }

    pub fn alpha(&self, u: usize, x: usize) -> Degree {
        self.alpha.get(u, x)
    }

    pub fn relation(&self) -> &FuzzyRelation {
        &self.alpha
    }

    pub fn point_index(&self, name: &str) -> Result<usize, DialError> {
        self.points
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| DialError::UnknownName(name.to_string()))
    }

    pub fn open_index(&self, name: &str) -> Result<usize, DialError> {
        self.opens
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| DialError::UnknownName(name.to_string()))
    }
}

fn check_distinct(names: &[String]) -> Result<(), DialError> {
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(DialError::DuplicateName(n.clone()));
        }
    }
    Ok(())
}

/// A verified morphism. `f` maps source-point indices to target-point
/// indices; `g` maps target-open indices to source-open indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DialMorphism {
    source: DialObject,
    target: DialObject,
    f: Vec<usize>,
    g: Vec<usize>,
}

impl DialMorphism {
    pub fn source(&self) -> &DialObject {
        &self.source
    }

    pub fn target(&self) -> &DialObject {
        &self.target
    }

    pub fn point_map(&self) -> &[usize] {
        &self.f
    }

    pub fn open_map(&self) -> &[usize] {
        &self.g
    }
}

/// Checks the defining inequality and assembles a morphism.
pub fn verify_morphism(
    source: &DialObject,
    target: &DialObject,
    f: Vec<usize>,
    g: Vec<usize>,
) -> Result<DialMorphism, DialError> {
    if f.len() != source.points.len() {
        return Err(DialError::NotTotal("point map".to_string()));
    }
    if g.len() != target.opens.len() {
        return Err(DialError::NotTotal("open map".to_string()));
    }
    for (u, &fu) in f.iter().enumerate() {
        for (y, &gy) in g.iter().enumerate() {
            let lhs = source.alpha(u, gy);
            let rhs = target.alpha(fu, y);
            if lhs > rhs {
                return Err(DialError::ConditionViolated {
                    point: source.points[u].clone(),
                    open: target.opens[y].clone(),
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(DialMorphism {
        source: source.clone(),
        target: target.clone(),
        f,
        g,
    })
}

/// Name-level wrapper over [`verify_morphism`]: `f` lists pairs
/// `(source point, target point)`, `g` pairs `(target open, source open)`.
pub fn verify_morphism_named(
    source: &DialObject,
    target: &DialObject,
    f: &[(String, String)],
    g: &[(String, String)],
) -> Result<DialMorphism, DialError> {
    let f_idx = total_map(f, &source.points, |n| target.point_index(n))?;
    let g_idx = total_map(g, &target.opens, |n| source.open_index(n))?;
    verify_morphism(source, target, f_idx, g_idx)
}

fn total_map(
    entries: &[(String, String)],
    domain: &[String],
    mut image_index: impl FnMut(&str) -> Result<usize, DialError>,
) -> Result<Vec<usize>, DialError> {
    let mut map: Vec<Option<usize>> = vec![None; domain.len()];
    for (from, to) in entries {
        let i = domain
            .iter()
            .position(|d| d == from)
            .ok_or_else(|| DialError::UnknownName(from.clone()))?;
        if map[i].is_some() {
            return Err(DialError::DuplicateEntry {
                point: from.clone(),
                open: to.clone(),
            });
        }
        map[i] = Some(image_index(to)?);
    }
    map.into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| DialError::NotTotal(domain[i].clone())))
        .collect()
}

pub fn identity(obj: &DialObject) -> DialMorphism {
    verify_morphism(
        obj,
        obj,
        (0..obj.points.len()).collect(),
        (0..obj.opens.len()).collect(),
    )
    .expect("identity always satisfies the condition")
}

/// Composition in diagram order: `first : A → B`, then `second : B → C`.
/// The composite condition is implied by the parts, but is re-checked.
pub fn compose(first: &DialMorphism, second: &DialMorphism) -> Result<DialMorphism, DialError> {
    if first.target != second.source {
        return Err(DialError::SourceTargetMismatch);
    }
    let f: Vec<usize> = first.f.iter().map(|&u| second.f[u]).collect();
    let g: Vec<usize> = second.g.iter().map(|&z| first.g[z]).collect();
    verify_morphism(&first.source, &second.target, f, g)
}

// ---------------------------------------------------------------------
// Function-space tables
// ---------------------------------------------------------------------

/// `cod^dom`, guarded against overflow by the caller's size bound.
fn function_count(dom: usize, cod: usize, bound: usize) -> Result<usize, DialError> {
    let mut count: usize = 1;
    for _ in 0..dom {
        count = count
            .checked_mul(cod)
            .filter(|&c| c <= bound)
            .ok_or(DialError::SizeBoundExceeded { size: usize::MAX, bound })?;
    }
    Ok(count)
}

/// Decodes function number `idx` (most significant digit first) into its
/// image table.
fn decode_function(mut idx: usize, dom: usize, cod: usize) -> Vec<usize> {
    let mut images = vec![0usize; dom];
    for slot in images.iter_mut().rev() {
        *slot = idx % cod;
        idx /= cod;
    }
    images
}

fn encode_function(images: &[usize], cod: usize) -> usize {
    images.iter().fold(0, |acc, &i| acc * cod + i)
}

fn function_name(images: &[usize], names: &[String]) -> String {
    let parts: Vec<&str> = images.iter().map(|&i| names[i].as_str()).collect();
    format!("[{}]", parts.join(","))
}

// ---------------------------------------------------------------------
// Monoidal structure
// ---------------------------------------------------------------------

/// The tensor `A ⊗ B = (U×V, X^V × Y^U, min)`: a point is a pair `(u,v)`,
/// an open is a pair of functions `(φ : V → X, ψ : U → Y)`, and the degree
/// at `((u,v), (φ,ψ))` is `min(α(u, φ(v)), β(v, ψ(u)))`.
pub fn tensor_obj(a: &DialObject, b: &DialObject, bound: usize) -> Result<DialObject, DialError> {
    let (nu, nx) = (a.points.len(), a.opens.len());
    let (nv, ny) = (b.points.len(), b.opens.len());
    let phi_count = function_count(nv, nx, bound)?;
    let psi_count = function_count(nu, ny, bound)?;
    let opens_count = phi_count
        .checked_mul(psi_count)
        .filter(|&c| c <= bound)
        .ok_or(DialError::SizeBoundExceeded { size: usize::MAX, bound })?;
    let cells = opens_count
        .checked_mul(nu * nv)
        .filter(|&c| c <= bound)
        .ok_or(DialError::SizeBoundExceeded { size: usize::MAX, bound })?;
    let _ = cells;

    let mut points = Vec::with_capacity(nu * nv);
    for u in &a.points {
        for v in &b.points {
            points.push(format!("({u},{v})"));
        }
    }
    let mut opens = Vec::with_capacity(opens_count);
    let mut table = Vec::with_capacity(nu * nv * opens_count);
    let phis: Vec<Vec<usize>> = (0..phi_count).map(|i| decode_function(i, nv, nx)).collect();
    let psis: Vec<Vec<usize>> = (0..psi_count).map(|i| decode_function(i, nu, ny)).collect();
    for phi in &phis {
        for psi in &psis {
            opens.push(format!(
                "({},{})",
                function_name(phi, &a.opens),
                function_name(psi, &b.opens)
            ));
        }
    }
    for u in 0..nu {
        for v in 0..nv {
            for phi in &phis {
                for psi in &psis {
                    table.push(a.alpha(u, phi[v]).meet(b.alpha(v, psi[u])));
                }
            }
        }
    }
    DialObject::new(points, opens, FuzzyRelation::new(nu * nv, opens_count, table)?)
}

/// The internal hom `A ⊸ B = (V^U × X^Y, U×Y, ⇒)`: a point is a candidate
/// morphism pair `(f : U → V, F : Y → X)`, an open is a pair `(u, y)`, and
/// the degree at `((f,F), (u,y))` is `α(u, F(y)) ⇒ β(f(u), y)`.
pub fn hom_obj(a: &DialObject, b: &DialObject, bound: usize) -> Result<DialObject, DialError> {
    let (nu, nx) = (a.points.len(), a.opens.len());
    let (nv, ny) = (b.points.len(), b.opens.len());
    let f_count = function_count(nu, nv, bound)?;
    let cap_count = function_count(ny, nx, bound)?;
    let points_count = f_count
        .checked_mul(cap_count)
        .filter(|&c| c <= bound)
        .ok_or(DialError::SizeBoundExceeded { size: usize::MAX, bound })?;
    points_count
        .checked_mul(nu * ny)
        .filter(|&c| c <= bound)
        .ok_or(DialError::SizeBoundExceeded { size: usize::MAX, bound })?;

    let fs: Vec<Vec<usize>> = (0..f_count).map(|i| decode_function(i, nu, nv)).collect();
    let caps: Vec<Vec<usize>> = (0..cap_count).map(|i| decode_function(i, ny, nx)).collect();
    let mut points = Vec::with_capacity(points_count);
    for f in &fs {
        for cap in &caps {
            points.push(format!(
                "({},{})",
                function_name(f, &b.points),
                function_name(cap, &a.opens)
            ));
        }
    }
    let mut opens = Vec::with_capacity(nu * ny);
    for u in &a.points {
        for y in &b.opens {
            opens.push(format!("({u},{y})"));
        }
    }
    let mut table = Vec::with_capacity(points_count * nu * ny);
    for f in &fs {
        for cap in &caps {
            for u in 0..nu {
                for y in 0..ny {
                    table.push(a.alpha(u, cap[y]).implies(b.alpha(f[u], y)));
                }
            }
        }
    }
    DialObject::new(points, opens, FuzzyRelation::new(points_count, nu * ny, table)?)
}

// ---------------------------------------------------------------------
// Products and coproducts
// ---------------------------------------------------------------------

/// `A × B = (U×V, X+Y, γ)` with `γ((u,v),(x,0)) = α(u,x)` and
/// `γ((u,v),(y,1)) = β(v,y)`.
pub fn product_obj(a: &DialObject, b: &DialObject) -> DialObject {
    let (nu, nx) = (a.points.len(), a.opens.len());
    let (nv, ny) = (b.points.len(), b.opens.len());
    let mut points = Vec::with_capacity(nu * nv);
    for u in &a.points {
        for v in &b.points {
            points.push(format!("({u},{v})"));
        }
    }
    let mut opens = Vec::with_capacity(nx + ny);
    for x in &a.opens {
        opens.push(format!("({x},0)"));
    }
    for y in &b.opens {
        opens.push(format!("({y},1)"));
    }
    let mut table = Vec::with_capacity(nu * nv * (nx + ny));
    for u in 0..nu {
        for v in 0..nv {
            for x in 0..nx {
                table.push(a.alpha(u, x));
            }
            for y in 0..ny {
                table.push(b.alpha(v, y));
            }
        }
    }
    DialObject::new(
        points,
        opens,
        FuzzyRelation::new(nu * nv, nx + ny, table).expect("sizes match"),
    )
    .expect("product carriers are nonempty")
}

/// `A ⊕ B = (U+V, X×Y, δ)` with `δ((u,0),(x,y)) = α(u,x)` and
/// `δ((v,1),(x,y)) = β(v,y)` — the mirror of the product relation.
pub fn coproduct_obj(a: &DialObject, b: &DialObject) -> DialObject {
    let (nu, nx) = (a.points.len(), a.opens.len());
    let (nv, ny) = (b.points.len(), b.opens.len());
    let mut points = Vec::with_capacity(nu + nv);
    for u in &a.points {
        points.push(format!("({u},0)"));
    }
    for v in &b.points {
        points.push(format!("({v},1)"));
    }
    let mut opens = Vec::with_capacity(nx * ny);
    for x in &a.opens {
        for y in &b.opens {
            opens.push(format!("({x},{y})"));
        }
    }
    let mut table = Vec::with_capacity((nu + nv) * nx * ny);
    for u in 0..nu {
        for x in 0..nx {
            for _y in 0..ny {
                table.push(a.alpha(u, x));
            }
        }
    }
    for v in 0..nv {
        for _x in 0..nx {
            for y in 0..ny {
                table.push(b.alpha(v, y));
            }
        }
    }
    DialObject::new(
        points,
        opens,
        FuzzyRelation::new(nu + nv, nx * ny, table).expect("sizes match"),
    )
    .expect("coproduct carriers are nonempty")
}

pub fn projection_fst(a: &DialObject, b: &DialObject) -> Result<DialMorphism, DialError> {
    let prod = product_obj(a, b);
    let nv = b.points.len();
    let f: Vec<usize> = (0..a.points.len() * nv).map(|i| i / nv).collect();
    // opens(A) → opens(A×B): x ↦ (x,0)
    let g: Vec<usize> = (0..a.opens.len()).collect();
    verify_morphism(&prod, a, f, g)
}

pub fn projection_snd(a: &DialObject, b: &DialObject) -> Result<DialMorphism, DialError> {
    let prod = product_obj(a, b);
    let nv = b.points.len();
    let f: Vec<usize> = (0..a.points.len() * nv).map(|i| i % nv).collect();
    let g: Vec<usize> = (0..b.opens.len()).map(|y| a.opens.len() + y).collect();
    verify_morphism(&prod, b, f, g)
}

/// The mediating morphism `⟨p, q⟩ : T → A × B` for `p : T → A`, `q : T → B`.
pub fn pairing(
    p: &DialMorphism,
    q: &DialMorphism,
) -> Result<DialMorphism, DialError> {
    if p.source != q.source {
        return Err(DialError::SourceTargetMismatch);
    }
    let a = &p.target;
    let b = &q.target;
    let prod = product_obj(a, b);
    let nv = b.points.len();
    let f: Vec<usize> = (0..p.source.points.len())
        .map(|t| p.f[t] * nv + q.f[t])
        .collect();
    let mut g = Vec::with_capacity(prod.opens.len());
    g.extend(p.g.iter().copied());
    g.extend(q.g.iter().copied());
    verify_morphism(&p.source, &prod, f, g)
}

pub fn injection_fst(a: &DialObject, b: &DialObject) -> Result<DialMorphism, DialError> {
    let cop = coproduct_obj(a, b);
    let ny = b.opens.len();
    let f: Vec<usize> = (0..a.points.len()).collect();
    // opens(A⊕B) = X×Y → opens(A): (x,y) ↦ x
    let g: Vec<usize> = (0..a.opens.len() * ny).map(|i| i / ny).collect();
    verify_morphism(a, &cop, f, g)
}

pub fn injection_snd(a: &DialObject, b: &DialObject) -> Result<DialMorphism, DialError> {
    let cop = coproduct_obj(a, b);
    let ny = b.opens.len();
    let f: Vec<usize> = (0..b.points.len()).map(|v| a.points.len() + v).collect();
    let g: Vec<usize> = (0..a.opens.len() * ny).map(|i| i % ny).collect();
    verify_morphism(b, &cop, f, g)
}

/// The mediating morphism `[p, q] : A ⊕ B → T` for `p : A → T`, `q : B → T`.
pub fn copairing(
    p: &DialMorphism,
    q: &DialMorphism,
) -> Result<DialMorphism, DialError> {
    if p.target != q.target {
        return Err(DialError::SourceTargetMismatch);
    }
    let a = &p.source;
    let b = &q.source;
    let cop = coproduct_obj(a, b);
    let mut f = Vec::with_capacity(cop.points.len());
    f.extend(p.f.iter().copied());
    f.extend(q.f.iter().copied());
    let ny = b.opens.len();
    let g: Vec<usize> = (0..p.target.opens.len())
        .map(|z| p.g[z] * ny + q.g[z])
        .collect();
    verify_morphism(&cop, &p.target, f, g)
}

// ---------------------------------------------------------------------
// Currying
// ---------------------------------------------------------------------

/// Transposes `m : A ⊗ B → C` into `A → (B ⊸ C)`.
///
/// Writing `m = (f, g)` with `g(z) = (φ_z : V → X, ψ_z : U → Y)`, the
/// transpose sends `u` to the pair `(v ↦ f(u,v), z ↦ ψ_z(u))` and the open
/// `(v, z)` back to `φ_z(v)`. Residuation of `min` and `⇒` makes the two
/// morphism conditions equivalent, and the result is re-verified anyway.
pub fn curry(
    a: &DialObject,
    b: &DialObject,
    c: &DialObject,
    m: &DialMorphism,
    bound: usize,
) -> Result<DialMorphism, DialError> {
    let tensor = tensor_obj(a, b, bound)?;
    if m.source != tensor || &m.target != c {
        return Err(DialError::ShapeMismatch(
            "morphism is not of shape A⊗B → C for the given objects".to_string(),
        ));
    }
    let hom = hom_obj(b, c, bound)?;
    let (nu, nx) = (a.points.len(), a.opens.len());
    let (nv, ny) = (b.points.len(), b.opens.len());
    let (nw, nz) = (c.points.len(), c.opens.len());
    let psi_count = function_count(nu, ny, bound)?;
    let cap_count = function_count(nz, ny, bound)?;

    // g(z) decoded into (φ_z, ψ_z).
    let decoded: Vec<(Vec<usize>, Vec<usize>)> = m
        .g
        .iter()
        .map(|&open_idx| {
            let phi = decode_function(open_idx / psi_count, nv, nx);
            let psi = decode_function(open_idx % psi_count, nu, ny);
            (phi, psi)
        })
        .collect();

    let mut f_hat = Vec::with_capacity(nu);
    for u in 0..nu {
        let h: Vec<usize> = (0..nv).map(|v| m.f[u * nv + v]).collect();
        let k: Vec<usize> = (0..nz).map(|z| decoded[z].1[u]).collect();
        f_hat.push(encode_function(&h, nw) * cap_count + encode_function(&k, ny));
    }
    let mut g_hat = Vec::with_capacity(nv * nz);
    for v in 0..nv {
        for z in 0..nz {
            g_hat.push(decoded[z].0[v]);
        }
    }
    verify_morphism(a, &hom, f_hat, g_hat)
}

/// Inverse of [`curry`]: turns `n : A → (B ⊸ C)` into `A ⊗ B → C`.
pub fn uncurry(
    a: &DialObject,
    b: &DialObject,
    c: &DialObject,
    n: &DialMorphism,
    bound: usize,
) -> Result<DialMorphism, DialError> {
    let hom = hom_obj(b, c, bound)?;
    if &n.source != a || n.target != hom {
        return Err(DialError::ShapeMismatch(
            "morphism is not of shape A → (B ⊸ C) for the given objects".to_string(),
        ));
    }
    let tensor = tensor_obj(a, b, bound)?;
    let (nu, nx) = (a.points.len(), a.opens.len());
    let (nv, ny) = (b.points.len(), b.opens.len());
    let (nw, nz) = (c.points.len(), c.opens.len());
    let cap_count = function_count(nz, ny, bound)?;
    let psi_count = function_count(nu, ny, bound)?;

    // n.f(u) decoded into (h_u : V → W, k_u : Z → Y).
    let decoded: Vec<(Vec<usize>, Vec<usize>)> = n
        .f
        .iter()
        .map(|&point_idx| {
            let h = decode_function(point_idx / cap_count, nv, nw);
            let k = decode_function(point_idx % cap_count, nz, ny);
            (h, k)
        })
        .collect();

    let mut f = Vec::with_capacity(nu * nv);
    for u in 0..nu {
        for v in 0..nv {
            f.push(decoded[u].0[v]);
        }
    }
    let mut g = Vec::with_capacity(nz);
    for z in 0..nz {
        let phi: Vec<usize> = (0..nv).map(|v| n.g[v * nz + z]).collect();
        let psi: Vec<usize> = (0..nu).map(|u| decoded[u].1[z]).collect();
        g.push(encode_function(&phi, nx) * psi_count + encode_function(&psi, ny));
    }
    verify_morphism(&tensor, c, f, g)
}

/// All verified morphisms `A → B` in deterministic lexicographic order.
/// The candidate space has `|V|^|U| · |X|^|Y|` pairs and is gated.
pub fn enumerate_morphisms(
    a: &DialObject,
    b: &DialObject,
    bound: usize,
) -> Result<Vec<DialMorphism>, DialError> {
    let (nu, nx) = (a.points.len(), a.opens.len());
    let (nv, ny) = (b.points.len(), b.opens.len());
    let f_count = function_count(nu, nv, bound)?;
    let g_count = function_count(ny, nx, bound)?;
    f_count
        .checked_mul(g_count)
        .filter(|&c| c <= bound)
        .ok_or(DialError::SizeBoundExceeded { size: usize::MAX, bound })?;
    let mut morphisms = Vec::new();
    for fi in 0..f_count {
        let f = decode_function(fi, nu, nv);
        for gi in 0..g_count {
            let g = decode_function(gi, ny, nx);
            if let Ok(m) = verify_morphism(a, b, f.clone(), g) {
                morphisms.push(m);
            }
        }
    }
    Ok(morphisms)
}
