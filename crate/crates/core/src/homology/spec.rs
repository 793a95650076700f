use std::collections::{BTreeMap, HashMap};

use super::document::{
    AbsoluteBasisDecl, BulletDecl, GammaDecl, GwDecl, RelativeBasisDecl, SpecDocument,
};
use super::gw::GwIndex;
use super::{BasisClass, GammaClass, HomClass, ProductKind, Side, SpecError};
use crate::field::{BaseField, Coefficient};
use crate::novikov::Exponent;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaGenerator {
    pub name: String,
    pub c1: i64,
    pub omega: Exponent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwEntry<F> {
    pub class: GammaClass,
    pub p: usize,
    /// Basis indices; the first `p` are absolute, the rest relative.
    pub args: [usize; 3],
    pub value: F,
}

/// A validated manifold: immutable once loaded.
///
/// Intersection tables are stored completed: super-commutative mirrors of
/// •₁ and •₃ entries and the identity column `x • [M,∂M] = x` are filled in
/// at load time. Pairs without an entry multiply to zero.
#[derive(Clone, Debug)]
pub struct ManifoldSpec<F> {
    name: String,
    dim: u32,
    absolute: Vec<BasisClass>,
    relative: Vec<BasisClass>,
    abs_dual: Vec<usize>,
    rel_dual: Vec<usize>,
    bullets: [BTreeMap<(usize, usize), HomClass<F>>; 3],
    jstar: Vec<HomClass<F>>,
    gamma: Vec<GammaGenerator>,
    gw_table: Vec<GwEntry<F>>,
    pub(super) gw_index: GwIndex<F>,
    bullet1_nondegenerate: bool,
    warnings: Vec<String>,
}

fn kind_slot(kind: ProductKind) -> usize {
    kind.index() as usize - 1
}

impl<F: Coefficient> ManifoldSpec<F> {
    pub fn from_json(text: &str) -> Result<Self, SpecError> {
        Self::from_document(&SpecDocument::from_json(text)?)
    }

    pub fn to_json(&self) -> String {
        self.to_document().to_json()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> BaseField {
        F::FIELD
    }

    /// Real dimension 2n.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn basis(&self, side: Side) -> &[BasisClass] {
        match side {
            Side::Absolute => &self.absolute,
            Side::Relative => &self.relative,
        }
    }

    pub fn rank(&self) -> usize {
        self.absolute.len()
    }

    pub fn degree(&self, side: Side, index: usize) -> u32 {
        self.basis(side)[index].degree
    }

    pub fn class_name(&self, side: Side, index: usize) -> &str {
        &self.basis(side)[index].name
    }

    pub fn find(&self, side: Side, name: &str) -> Option<usize> {
        self.basis(side).iter().position(|b| b.name == name)
    }

    /// Index of e_i^∨ in the relative basis.
    pub fn dual_of_absolute(&self, i: usize) -> usize {
        self.abs_dual[i]
    }

    /// Index of the absolute class a relative class is dual to.
    pub fn dual_of_relative(&self, j: usize) -> usize {
        self.rel_dual[j]
    }

    /// `[pt]`, always the first absolute class.
    pub fn point(&self) -> usize {
        0
    }

    /// `[M,∂M]`, the dual of `[pt]`.
    pub fn fundamental(&self) -> usize {
        self.abs_dual[0]
    }

    pub fn bullet1_nondegenerate(&self) -> bool {
        self.bullet1_nondegenerate
    }

    /// Degree-admissible pairs without a declared product, found at load time.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn gamma_generators(&self) -> &[GammaGenerator] {
        &self.gamma
    }

    pub fn gw_table(&self) -> &[GwEntry<F>] {
        &self.gw_table
    }

    pub fn c1(&self, class: &GammaClass) -> i64 {
        class.0.iter().zip(&self.gamma).map(|(k, g)| k * g.c1).sum()
    }

    pub fn omega(&self, class: &GammaClass) -> Exponent {
        class
            .0
            .iter()
            .zip(&self.gamma)
            .fold(Exponent::ZERO, |acc, (k, g)| acc + g.omega * *k)
    }

    /// Positive generator of G, the group of half-periods ω(A)/2.
    pub fn exponent_group_generator(&self) -> Exponent {
        Exponent::group_generator(self.gamma.iter().map(|g| g.omega * 1).map(half))
    }

    /// Smallest positive declared ω value, if any.
    pub fn min_positive_omega(&self) -> Option<Exponent> {
        self.gamma
            .iter()
            .map(|g| g.omega)
            .filter(Exponent::is_positive)
            .min()
    }

    /// Distinct Γ-classes carrying table entries.
    pub fn gamma_classes(&self) -> Vec<GammaClass> {
        let mut v: Vec<_> = self.gw_table.iter().map(|e| e.class.clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Table value of `e_i • e_j`.
    pub fn bullet_basis(&self, kind: ProductKind, i: usize, j: usize) -> HomClass<F> {
        self.bullets[kind_slot(kind)]
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| HomClass::zero(kind.signature().2))
    }

    /// Declared (or completed) entries of one table.
    pub fn bullet_entries(
        &self,
        kind: ProductKind,
    ) -> impl Iterator<Item = ((usize, usize), &HomClass<F>)> + '_ {
        self.bullets[kind_slot(kind)].iter().map(|(k, v)| (*k, v))
    }

    /// Bilinear extension of a classical intersection product.
    pub fn classical_bullet(
        &self,
        kind: ProductKind,
        a: &HomClass<F>,
        b: &HomClass<F>,
    ) -> Result<HomClass<F>, SpecError> {
        let (left, right, out) = kind.signature();
        if a.side() != left || b.side() != right {
            return Err(SpecError::SideMismatch(format!(
                "•{} expects ({left}, {right}) operands, got ({}, {})",
                kind.index(),
                a.side(),
                b.side()
            )));
        }
        let table = &self.bullets[kind_slot(kind)];
        let mut acc = HomClass::zero(out);
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                if let Some(r) = table.get(&(i, j)) {
                    acc = acc.plus(&r.scale(&(x.clone() * y.clone())));
                }
            }
        }
        Ok(acc)
    }

    /// Image of an absolute basis class under j*.
    pub fn jstar_basis(&self, i: usize) -> &HomClass<F> {
        &self.jstar[i]
    }

    pub fn jstar(&self, a: &HomClass<F>) -> Result<HomClass<F>, SpecError> {
        if a.side() != Side::Absolute {
            return Err(SpecError::SideMismatch(
                "j* is defined on absolute classes".into(),
            ));
        }
        Ok(a.terms()
            .fold(HomClass::zero(Side::Relative), |acc, (i, z)| {
                acc.plus(&self.jstar[i].scale(z))
            }))
    }

    /// Degree of a homogeneous class; `None` for zero or mixed classes.
    pub fn homogeneous_degree(&self, a: &HomClass<F>) -> Option<u32> {
        let mut degs = a.terms().map(|(i, _)| self.degree(a.side(), i));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn format_class(&self, a: &HomClass<F>) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        a.terms()
            .map(|(i, z)| format!("{z} · {}", self.class_name(a.side(), i)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn from_document(doc: &SpecDocument) -> Result<Self, SpecError> {
        if doc.field != F::FIELD {
            return Err(SpecError::validation(
                "field",
                format!(
                    "document is over {}, but {} was requested",
                    doc.field,
                    F::FIELD
                ),
            ));
        }
        if doc.dim == 0 || !doc.dim.is_multiple_of(2) {
            return Err(SpecError::validation(
                "dim",
                format!("dimension must be even and positive, got {}", doc.dim),
            ));
        }
        let dim = doc.dim;

        let absolute: Vec<BasisClass> = doc
            .absolute_basis
            .iter()
            .map(|b| BasisClass {
                name: b.name.clone(),
                degree: b.degree,
                side: Side::Absolute,
            })
            .collect();
        let relative: Vec<BasisClass> = doc
            .relative_basis
            .iter()
            .map(|b| BasisClass {
                name: b.name.clone(),
                degree: b.degree,
                side: Side::Relative,
            })
            .collect();
        if absolute.is_empty() {
            return Err(SpecError::validation(
                "basis.nonempty",
                "absolute basis is empty",
            ));
        }
        if absolute.len() != relative.len() {
            return Err(SpecError::validation(
                "basis.size",
                format!(
                    "absolute basis has {} classes but relative basis has {}",
                    absolute.len(),
                    relative.len()
                ),
            ));
        }
        let abs_names = name_index(&absolute)?;
        let rel_names = name_index(&relative)?;
        for b in absolute.iter().chain(&relative) {
            if b.degree > dim {
                return Err(SpecError::validation(
                    "basis.degree",
                    format!("{} has degree {} > {dim}", b.name, b.degree),
                ));
            }
        }
        if absolute[0].degree != 0 {
            return Err(SpecError::validation(
                "basis.point",
                format!(
                    "first absolute class {} must be [pt] in degree 0",
                    absolute[0].name
                ),
            ));
        }

        let mut abs_dual = vec![usize::MAX; absolute.len()];
        let mut rel_dual = vec![usize::MAX; relative.len()];
        for (j, decl) in doc.relative_basis.iter().enumerate() {
            let i = *abs_names.get(decl.dual_of.as_str()).ok_or_else(|| {
                SpecError::validation(
                    "duality.bijection",
                    format!(
                        "{} is declared dual to unknown class {}",
                        decl.name, decl.dual_of
                    ),
                )
            })?;
            if abs_dual[i] != usize::MAX {
                return Err(SpecError::validation(
                    "duality.bijection",
                    format!("{} has two declared duals", decl.dual_of),
                ));
            }
            abs_dual[i] = j;
            rel_dual[j] = i;
            if relative[j].degree + absolute[i].degree != dim {
                return Err(SpecError::validation(
                    "duality.degree",
                    format!(
                        "dual pair ({}, {}) has degrees ({}, {}) which do not sum to {dim}",
                        absolute[i].name, relative[j].name, absolute[i].degree, relative[j].degree
                    ),
                ));
            }
        }

        let mut spec = ManifoldSpec {
            name: doc.name.clone(),
            dim,
            absolute,
            relative,
            abs_dual,
            rel_dual,
            bullets: [BTreeMap::new(), BTreeMap::new(), BTreeMap::new()],
            jstar: Vec::new(),
            gamma: Vec::new(),
            gw_table: Vec::new(),
            gw_index: GwIndex::default(),
            bullet1_nondegenerate: doc.bullet1_nondegenerate,
            warnings: Vec::new(),
        };
        let names = [&abs_names, &rel_names];

        for kind in ProductKind::ALL {
            let decls = match kind {
                ProductKind::One => &doc.bullet1,
                ProductKind::Two => &doc.bullet2,
                ProductKind::Three => &doc.bullet3,
            };
            spec.load_bullets(kind, decls, names)?;
        }
        spec.complete_bullets()?;
        spec.check_kronecker()?;
        spec.jstar = load_jstar(&spec, &doc.jstar, names)?;
        spec.gamma = load_gamma(&doc.gamma_generators)?;
        spec.gw_table = doc
            .gw_table
            .iter()
            .map(|g| load_gw_entry(&spec, g, names))
            .collect::<Result<_, _>>()?;
        spec.gw_index = GwIndex::build(&spec);
        Ok(spec)
    }

    fn load_bullets(
        &mut self,
        kind: ProductKind,
        decls: &[BulletDecl],
        names: [&HashMap<String, usize>; 2],
    ) -> Result<(), SpecError> {
        let (left, right, out) = kind.signature();
        let n = kind.index();
        for d in decls {
            let i = lookup(names, left, &d.left, &format!("•{n} left operand"))?;
            let j = lookup(names, right, &d.right, &format!("•{n} right operand"))?;
            let mut result = HomClass::zero(out);
            for (name, value) in &d.result {
                let k = lookup(names, out, name, &format!("•{n} result"))?;
                result.add_term(k, parse_coeff::<F>(value)?);
            }
            let expected =
                self.degree(left, i) as i64 + self.degree(right, j) as i64 - self.dim as i64;
            for (k, _) in result.terms() {
                if self.degree(out, k) as i64 != expected {
                    return Err(SpecError::validation(
                        "bullet.degree",
                        format!(
                            "{} •{n} {} must land in degree {expected}, but contains {}",
                            d.left,
                            d.right,
                            self.class_name(out, k)
                        ),
                    ));
                }
            }
            if self.bullets[kind_slot(kind)]
                .insert((i, j), result)
                .is_some()
            {
                return Err(SpecError::validation(
                    "bullet.duplicate",
                    format!("{} •{n} {} is declared twice", d.left, d.right),
                ));
            }
        }
        Ok(())
    }

    fn complete_bullets(&mut self) -> Result<(), SpecError> {
        let declared: [Vec<(usize, usize)>; 3] =
            std::array::from_fn(|s| self.bullets[s].keys().copied().collect());

        // identity column: x • [M,∂M] = x
        let top = self.fundamental();
        for kind in [ProductKind::Two, ProductKind::Three] {
            let (left, _, _) = kind.signature();
            for i in 0..self.rank() {
                let unit = HomClass::basis(left, i);
                match self.bullets[kind_slot(kind)].get(&(i, top)) {
                    Some(r) if *r != unit => {
                        return Err(SpecError::validation(
                            "bullet.unit",
                            format!(
                                "{} •{} {} must equal {}, declared {}",
                                self.class_name(left, i),
                                kind.index(),
                                self.class_name(Side::Relative, top),
                                self.class_name(left, i),
                                self.format_class(r)
                            ),
                        ))
                    }
                    Some(_) => {}
                    None => {
                        self.bullets[kind_slot(kind)].insert((i, top), unit);
                    }
                }
            }
        }

        // super-commutative mirrors of the symmetric products
        for kind in [ProductKind::One, ProductKind::Three] {
            let side = kind.signature().0;
            let slot = kind_slot(kind);
            let keys: Vec<_> = self.bullets[slot].keys().copied().collect();
            for (i, j) in keys {
                let odd = self.degree(side, i) % 2 == 1 && self.degree(side, j) % 2 == 1;
                let mirrored = self.bullets[slot][&(i, j)].scale(&F::sign(odd));
                match self.bullets[slot].get(&(j, i)) {
                    Some(r) if *r != mirrored => {
                        return Err(SpecError::validation(
                            "bullet.mirror",
                            format!(
                            "{} •{n} {} = {} contradicts {} •{n} {} = {} (graded commutativity)",
                            self.class_name(side, i),
                            self.class_name(side, j),
                            self.format_class(&self.bullets[slot][&(i, j)]),
                            self.class_name(side, j),
                            self.class_name(side, i),
                            self.format_class(r),
                            n = kind.index()
                        ),
                        ))
                    }
                    Some(_) => {}
                    None => {
                        self.bullets[slot].insert((j, i), mirrored);
                    }
                }
            }
        }

        for kind in ProductKind::ALL {
            let (left, right, _) = kind.signature();
            let slot = kind_slot(kind);
            for i in 0..self.rank() {
                for j in 0..self.rank() {
                    let admissible = self.degree(left, i) + self.degree(right, j) >= self.dim;
                    let covered = declared[slot].contains(&(i, j))
                        || self.bullets[slot].contains_key(&(i, j));
                    if admissible && !covered {
                        self.warnings.push(format!(
                            "{} •{} {} has no declared product; treated as zero",
                            self.class_name(left, i),
                            kind.index(),
                            self.class_name(right, j)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// `e_i •₂ e_j^∨ = δ_ij [pt]` for complementary degrees.
    fn check_kronecker(&self) -> Result<(), SpecError> {
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                if self.degree(Side::Absolute, i) + self.degree(Side::Relative, j) != self.dim {
                    continue;
                }
                let got = self.bullet_basis(ProductKind::Two, i, j);
                let want = if self.rel_dual[j] == i {
                    HomClass::basis(Side::Absolute, self.point())
                } else {
                    HomClass::zero(Side::Absolute)
                };
                if got != want {
                    return Err(SpecError::validation(
                        "duality.kronecker",
                        format!(
                            "{} •₂ {} = {} but Kronecker duality requires {}",
                            self.class_name(Side::Absolute, i),
                            self.class_name(Side::Relative, j),
                            self.format_class(&got),
                            self.format_class(&want)
                        ),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Canonical document; parsing it back yields an identical spec.
    pub fn to_document(&self) -> SpecDocument {
        let class_map = |c: &HomClass<F>| -> BTreeMap<String, String> {
            c.terms()
                .map(|(k, z)| (self.class_name(c.side(), k).to_string(), z.to_string()))
                .collect()
        };
        let bullets = |kind: ProductKind| -> Vec<BulletDecl> {
            let (left, right, _) = kind.signature();
            self.bullets[kind_slot(kind)]
                .iter()
                .map(|((i, j), r)| BulletDecl {
                    left: self.class_name(left, *i).to_string(),
                    right: self.class_name(right, *j).to_string(),
                    result: class_map(r),
                })
                .collect()
        };
        SpecDocument {
            name: self.name.clone(),
            dim: self.dim,
            field: F::FIELD,
            absolute_basis: self
                .absolute
                .iter()
                .map(|b| AbsoluteBasisDecl {
                    name: b.name.clone(),
                    degree: b.degree,
                })
                .collect(),
            relative_basis: self
                .relative
                .iter()
                .enumerate()
                .map(|(j, b)| RelativeBasisDecl {
                    name: b.name.clone(),
                    degree: b.degree,
                    dual_of: self.absolute[self.rel_dual[j]].name.clone(),
                })
                .collect(),
            bullet1: bullets(ProductKind::One),
            bullet2: bullets(ProductKind::Two),
            bullet3: bullets(ProductKind::Three),
            jstar: self
                .jstar
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.absolute[i].name.clone(), class_map(c)))
                .collect(),
            gamma_generators: self
                .gamma
                .iter()
                .map(|g| GammaDecl {
                    name: g.name.clone(),
                    c1: g.c1,
                    omega: g.omega.to_string(),
                })
                .collect(),
            gw_table: self
                .gw_table
                .iter()
                .map(|e| GwDecl {
                    class: e.class.0.clone(),
                    p: e.p,
                    args: (0..3)
                        .map(|k| {
                            let side = if k < e.p {
                                Side::Absolute
                            } else {
                                Side::Relative
                            };
                            self.class_name(side, e.args[k]).to_string()
                        })
                        .collect(),
                    value: e.value.to_string(),
                })
                .collect(),
            bullet1_nondegenerate: self.bullet1_nondegenerate,
        }
    }
}

fn half(w: Exponent) -> Exponent {
    Exponent::new(w.numer(), w.denom() * 2)
}

fn name_index(basis: &[BasisClass]) -> Result<HashMap<String, usize>, SpecError> {
    let mut map = HashMap::new();
    for (i, b) in basis.iter().enumerate() {
        if map.insert(b.name.clone(), i).is_some() {
            return Err(SpecError::validation(
                "basis.unique",
                format!("{} basis class {} is declared twice", b.side, b.name),
            ));
        }
    }
    Ok(map)
}

fn lookup(
    names: [&HashMap<String, usize>; 2],
    side: Side,
    name: &str,
    what: &str,
) -> Result<usize, SpecError> {
    let (own, other) = match side {
        Side::Absolute => (names[0], names[1]),
        Side::Relative => (names[1], names[0]),
    };
    if let Some(i) = own.get(name) {
        return Ok(*i);
    }
    if other.contains_key(name) {
        return Err(SpecError::validation(
            "side",
            format!("{what} {name} is not {side} (side mismatch)"),
        ));
    }
    Err(SpecError::validation(
        "unknown_class",
        format!("{what} {name} is not declared"),
    ))
}

fn parse_coeff<F: Coefficient>(s: &str) -> Result<F, SpecError> {
    F::parse(s).map_err(|e| SpecError::validation("coefficient", e.to_string()))
}

fn load_jstar<F: Coefficient>(
    spec: &ManifoldSpec<F>,
    decl: &BTreeMap<String, BTreeMap<String, String>>,
    names: [&HashMap<String, usize>; 2],
) -> Result<Vec<HomClass<F>>, SpecError> {
    let mut out = vec![HomClass::zero(Side::Relative); spec.rank()];
    for (src, image) in decl {
        let i = lookup(names, Side::Absolute, src, "j* source")?;
        for (name, value) in image {
            let k = lookup(names, Side::Relative, name, "j* image")?;
            if spec.degree(Side::Relative, k) != spec.degree(Side::Absolute, i) {
                return Err(SpecError::validation(
                    "jstar.degree",
                    format!("j*({src}) contains {name} of a different degree"),
                ));
            }
            out[i].add_term(k, parse_coeff::<F>(value)?);
        }
    }
    Ok(out)
}

fn load_gamma(decls: &[GammaDecl]) -> Result<Vec<GammaGenerator>, SpecError> {
    let mut out: Vec<GammaGenerator> = Vec::new();
    for d in decls {
        let omega: Exponent =
            d.omega
                .parse()
                .map_err(|e: crate::field::CoefficientParseError| {
                    SpecError::validation("gamma.omega", e.to_string())
                })?;
        if omega.is_negative() {
            return Err(SpecError::validation(
                "gamma.omega",
                format!("ω({}) = {omega} must be non-negative", d.name),
            ));
        }
        if out.iter().any(|g| g.name == d.name) {
            return Err(SpecError::validation(
                "gamma.unique",
                format!("Γ generator {} is declared twice", d.name),
            ));
        }
        out.push(GammaGenerator {
            name: d.name.clone(),
            c1: d.c1,
            omega,
        });
    }
    Ok(out)
}

fn load_gw_entry<F: Coefficient>(
    spec: &ManifoldSpec<F>,
    g: &GwDecl,
    names: [&HashMap<String, usize>; 2],
) -> Result<GwEntry<F>, SpecError> {
    let label = format!("GW_{{{:?},{},3}}({})", g.class, g.p, g.args.join(","));
    if g.class.len() != spec.gamma.len() {
        return Err(SpecError::validation(
            "gw.class",
            format!(
                "{label}: class has {} coordinates, Γ has {} generators",
                g.class.len(),
                spec.gamma.len()
            ),
        ));
    }
    let class = GammaClass(g.class.clone());
    if class.is_zero() {
        return Err(SpecError::validation(
            "gw.nonzero_class",
            format!(
                "{label}: table entries require A ≠ 0; invariants with A = 0 are computed from the intersection products"
            ),
        ));
    }
    if spec.c1(&class) == 0 && spec.omega(&class).is_zero() {
        return Err(SpecError::validation(
            "gw.nonzero_class",
            format!("{label}: class has c1 = 0 and ω = 0 and so vanishes in Γ (A ≠ 0 required)"),
        ));
    }
    if g.p > 3 {
        return Err(SpecError::validation(
            "gw.p",
            format!("{label}: p must be in 0..=3"),
        ));
    }
    if g.args.len() != 3 {
        return Err(SpecError::validation(
            "gw.args",
            format!("{label}: exactly 3 arguments required"),
        ));
    }
    let mut args = [0usize; 3];
    for (k, name) in g.args.iter().enumerate() {
        let side = if k < g.p {
            Side::Absolute
        } else {
            Side::Relative
        };
        args[k] = lookup(names, side, name, &format!("{label}: argument {}", k + 1))?;
    }
    let total: i64 = (0..3)
        .map(|k| {
            let side = if k < g.p {
                Side::Absolute
            } else {
                Side::Relative
            };
            spec.degree(side, args[k]) as i64
        })
        .sum();
    let expected = 2 * spec.dim as i64 - 2 * spec.c1(&class);
    if total != expected {
        return Err(SpecError::validation(
            "gw.dimension",
            format!(
                "{label}: argument degrees sum to {total}, dimension condition requires {expected}"
            ),
        ));
    }
    Ok(GwEntry {
        class,
        p: g.p,
        args,
        value: parse_coeff::<F>(&g.value)?,
    })
}
