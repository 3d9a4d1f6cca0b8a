//! The algebra C(X,k) of k-valued continuous functions on a finite space.
//!
//! On a finite space a continuous k-valued function is exactly a function
//! constant on each connected component, so C(X,k) ≅ k^(components) is a
//! finite product of fields. Every ideal is then determined by its zero set
//! (a set of components), which is how [`IdealDescriptor`] decides
//! membership.

use std::sync::Arc;

use serde::Serialize;

use crate::balg::{Filter, Ultrafilter};
use crate::bits;
use crate::error::{Error, Result};
use crate::topo::FiniteSpace;
use crate::ufspace::UfSpace;
use crate::valfield::{AbsValue, Scalar, ValuedField};

pub type SpaceRef = Arc<FiniteSpace>;

fn same_space(a: &SpaceRef, b: &SpaceRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedFunction {
    space: SpaceRef,
    field: ValuedField,
    values: Vec<Scalar>,
}

impl BoundedFunction {
    pub fn new(space: SpaceRef, field: ValuedField, values: Vec<Scalar>) -> Result<Self> {
        if values.len() != space.len() {
            return Err(Error::Mismatch("number of values and points"));
        }
        for v in &values {
            field.check(v)?;
        }
        for &c in space.components() {
            let first = bits::lowest(c).unwrap();
            if let Some(bad) = bits::iter(c).find(|&i| values[i] != values[first]) {
                return Err(Error::NotLocallyConstant(space.points()[bad].clone()));
            }
        }
        Ok(Self {
            space,
            field,
            values,
        })
    }

    /// Builds a function from `point label → scalar text`.
    pub fn from_labels<'a>(
        space: SpaceRef,
        field: ValuedField,
        values: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut slots: Vec<Option<Scalar>> = vec![None; space.len()];
        for (label, text) in values {
            let i = space.point_index(label)?;
            slots[i] = Some(field.parse_scalar(text)?);
        }
        let values = slots
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| Error::Json(format!("no value for point `{}`", space.points()[i])))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(space, field, values)
    }

    pub fn constant(space: SpaceRef, field: ValuedField, c: Scalar) -> Result<Self> {
        let values = vec![c; space.len()];
        Self::new(space, field, values)
    }

    pub fn zero(space: SpaceRef, field: ValuedField) -> Self {
        let values = vec![field.zero(); space.len()];
        Self {
            space,
            field,
            values,
        }
    }

    /// The idempotent 1_U; `set` must be clopen.
    pub fn indicator(space: SpaceRef, field: ValuedField, set: u64) -> Result<Self> {
        let values = (0..space.len())
            .map(|i| {
                if bits::contains(set, i) {
                    field.one()
                } else {
                    field.zero()
                }
            })
            .collect();
        Self::new(space, field, values)
    }

    pub fn space(&self) -> &SpaceRef {
        &self.space
    }

    pub fn field(&self) -> &ValuedField {
        &self.field
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn value(&self, point: usize) -> &Scalar {
        &self.values[point]
    }

    /// The common value on a component.
    pub fn component_value(&self, component: usize) -> &Scalar {
        let first = bits::lowest(self.space.components()[component]).unwrap();
        &self.values[first]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| self.field.is_zero(v))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if !same_space(&self.space, &other.space) {
            return Err(Error::Mismatch("spaces"));
        }
        if self.field != other.field {
            return Err(Error::Mismatch("fields"));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            space: self.space.clone(),
            field: self.field.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| op(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.field.sub(a, b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.field.mul(a, b))
    }

    pub fn scale(&self, a: &Scalar) -> Self {
        Self {
            space: self.space.clone(),
            field: self.field.clone(),
            values: self.values.iter().map(|v| self.field.mul(a, v)).collect(),
        }
    }

    pub fn magnitudes(&self) -> Vec<AbsValue> {
        self.values.iter().map(|v| self.field.abs(v)).collect()
    }

    /// max over points of |f(x)|; the empty supremum is Zero.
    pub fn sup_norm(&self) -> AbsValue {
        self.sup_over(self.space.full())
    }

    pub fn sup_over(&self, set: u64) -> AbsValue {
        bits::iter(set)
            .map(|i| self.field.abs(&self.values[i]))
            .max()
            .unwrap_or(AbsValue::Zero)
    }

    /// Whether f vanishes at every point of `set`.
    pub fn vanishes_on(&self, set: u64) -> bool {
        bits::iter(set).all(|i| self.field.is_zero(&self.values[i]))
    }

    pub fn render(&self) -> Vec<(String, String)> {
        self.space
            .points()
            .iter()
            .zip(&self.values)
            .map(|(p, v)| (p.clone(), self.field.format_scalar(v)))
            .collect()
    }
}

/// ‖f‖_F = inf over U ∈ F of sup over x ∈ U of |f(x)|.
pub fn uf_seminorm(f: &BoundedFunction, ultrafilter: &Ultrafilter) -> Result<AbsValue> {
    let co = f.space.clopens();
    if ultrafilter.algebra() != co.algebra() {
        return Err(Error::Mismatch("ultrafilter algebra"));
    }
    Ok(ultrafilter
        .filter()
        .members()
        .iter()
        .map(|&u| f.sup_over(co.to_points(u)))
        .min()
        .unwrap_or_else(|| f.sup_norm()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDescriptor {
    space: SpaceRef,
    field: ValuedField,
    generators: Vec<BoundedFunction>,
    // mask over component indices
    zero_set: u64,
}

impl IdealDescriptor {
    pub fn generated_by(
        space: SpaceRef,
        field: ValuedField,
        generators: Vec<BoundedFunction>,
    ) -> Result<Self> {
        for g in &generators {
            if !same_space(&space, &g.space) || g.field != field {
                return Err(Error::Mismatch("generator space or field"));
            }
        }
        let zero_set = (0..space.components().len())
            .filter(|&c| {
                generators
                    .iter()
                    .all(|g| field.is_zero(g.component_value(c)))
            })
            .fold(0u64, |m, c| m | 1 << c);
        Ok(Self {
            space,
            field,
            generators,
            zero_set,
        })
    }

    /// The maximal ideal of functions vanishing on one component.
    pub fn maximal_at(space: SpaceRef, field: ValuedField, component: usize) -> Result<Self> {
        let comp = *space
            .components()
            .get(component)
            .ok_or(Error::Mismatch("component index"))?;
        let gen = BoundedFunction::indicator(space.clone(), field.clone(), space.full() & !comp)?;
        Self::generated_by(space, field, vec![gen])
    }

    /// m_x = {f : f(x) = 0}.
    pub fn at_point(space: SpaceRef, field: ValuedField, point: usize) -> Result<Self> {
        let c = space.component_of(point);
        Self::maximal_at(space, field, c)
    }

    pub fn space(&self) -> &SpaceRef {
        &self.space
    }

    pub fn field(&self) -> &ValuedField {
        &self.field
    }

    pub fn generators(&self) -> &[BoundedFunction] {
        &self.generators
    }

    /// Components on which every member vanishes, as a component mask.
    pub fn zero_set(&self) -> u64 {
        self.zero_set
    }

    pub fn zero_set_points(&self) -> u64 {
        bits::iter(self.zero_set).fold(0, |m, c| m | self.space.components()[c])
    }

    pub fn contains(&self, f: &BoundedFunction) -> bool {
        same_space(&self.space, &f.space)
            && self.field == f.field
            && f.vanishes_on(self.zero_set_points())
    }

    pub fn is_prime(&self) -> bool {
        bits::count(self.zero_set) == 1
    }

    pub fn is_maximal(&self) -> bool {
        self.is_prime()
    }

    fn require_maximal(&self) -> Result<usize> {
        if self.is_maximal() {
            Ok(bits::lowest(self.zero_set).unwrap())
        } else {
            Err(Error::NotMaximal(bits::count(self.zero_set)))
        }
    }

    /// {U ∈ CO(X) : 1_U ∉ m}.
    pub fn to_ultrafilter(&self) -> Result<Ultrafilter> {
        if !self.is_prime() {
            return Err(Error::NotPrime(bits::count(self.zero_set)));
        }
        let co = self.space.clopens();
        let members = co.algebra().elements().filter(|&u| {
            let one_u =
                BoundedFunction::indicator(self.space.clone(), self.field.clone(), co.to_points(u))
                    .expect("clopen indicator");
            !self.contains(&one_u)
        });
        Ultrafilter::try_from_filter(Filter::from_members(co.algebra(), members)?)
    }

    /// ‖f + m‖ = inf over g ∈ m of ‖f - g‖, attained by g = f off the zero set.
    pub fn quotient_norm(&self, f: &BoundedFunction) -> Result<AbsValue> {
        let c = self.require_maximal()?;
        if !same_space(&self.space, &f.space) || self.field != f.field {
            return Err(Error::Mismatch("function and ideal"));
        }
        Ok(self.field.abs(f.component_value(c)))
    }

    /// ‖a + g‖ = max(|a|, ‖g‖) for a ∈ k and g ∈ m.
    pub fn orthogonal_decomposition_check(&self, a: &Scalar, g: &BoundedFunction) -> Result<bool> {
        self.require_maximal()?;
        self.field.check(a)?;
        if !self.contains(g) {
            return Err(Error::NotInIdeal);
        }
        let a_const = BoundedFunction::constant(self.space.clone(), self.field.clone(), a.clone())?;
        let lhs = a_const.add(g)?.sup_norm();
        let rhs = self.field.abs(a).max(g.sup_norm());
        Ok(lhs == rhs)
    }
}

/// {f : ‖f‖_F = 0}, generated by the indicator of the largest F-null clopen.
///
/// ‖1_U‖_F = 0 iff some V ∈ F misses U iff ¬U ∈ F, so the null clopens are
/// the complements of members of F.
pub fn ideal_from_uf(
    space: &SpaceRef,
    field: &ValuedField,
    ultrafilter: &Ultrafilter,
) -> Result<IdealDescriptor> {
    if space.is_empty() {
        return Err(Error::EmptySpace);
    }
    let co = space.clopens();
    if ultrafilter.algebra() != co.algebra() {
        return Err(Error::Mismatch("ultrafilter algebra"));
    }
    let alg = co.algebra();
    let null_union = ultrafilter
        .filter()
        .members()
        .iter()
        .fold(0u64, |m, &v| m | co.to_points(alg.not(v)));
    let gen = BoundedFunction::indicator(space.clone(), field.clone(), null_union)?;
    IdealDescriptor::generated_by(space.clone(), field.clone(), vec![gen])
}

pub fn uf_from_ideal(m: &IdealDescriptor) -> Result<Ultrafilter> {
    m.to_ultrafilter()
}

pub fn quotient_norm(f: &BoundedFunction, m: &IdealDescriptor) -> Result<AbsValue> {
    m.quotient_norm(f)
}

/// One maximal ideal per component, in component order.
pub fn enumerate_max_ideals(space: &SpaceRef, field: &ValuedField) -> Vec<IdealDescriptor> {
    (0..space.components().len())
        .map(|c| IdealDescriptor::maximal_at(space.clone(), field.clone(), c).expect("in range"))
        .collect()
}

/// Every ideal of C(X,k), one per zero set (subset of components).
pub fn enumerate_ideals(space: &SpaceRef, field: &ValuedField) -> Vec<IdealDescriptor> {
    let comps = space.components();
    (0..1u64 << comps.len())
        .map(|zero_set| {
            let support =
                bits::iter(!zero_set & bits::full(comps.len())).fold(0u64, |m, c| m | comps[c]);
            let gen = BoundedFunction::indicator(space.clone(), field.clone(), support)
                .expect("unions of components are clopen");
            IdealDescriptor::generated_by(space.clone(), field.clone(), vec![gen])
                .expect("same space")
        })
        .collect()
}

/// sup over maximal ideals m of |f(m)|.
pub fn algebraic_norm(f: &BoundedFunction) -> AbsValue {
    enumerate_max_ideals(&f.space, &f.field)
        .iter()
        .map(|m| m.quotient_norm(f).expect("maximal, same space"))
        .max()
        .unwrap_or(AbsValue::Zero)
}

/// A bounded multiplicative seminorm on C(X,k), realized as ‖·‖_F.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BerkovichPoint {
    space: SpaceRef,
    field: ValuedField,
    ultrafilter: Ultrafilter,
}

impl BerkovichPoint {
    pub fn new(space: SpaceRef, field: ValuedField, ultrafilter: Ultrafilter) -> Result<Self> {
        if ultrafilter.algebra() != space.clopens().algebra() {
            return Err(Error::Mismatch("ultrafilter algebra"));
        }
        Ok(Self {
            space,
            field,
            ultrafilter,
        })
    }

    pub fn ultrafilter(&self) -> &Ultrafilter {
        &self.ultrafilter
    }

    pub fn eval(&self, f: &BoundedFunction) -> Result<AbsValue> {
        if self.field != f.field {
            return Err(Error::Mismatch("fields"));
        }
        uf_seminorm(f, &self.ultrafilter)
    }

    /// supp(x) = {f : |f(x)| = 0}.
    pub fn support(&self) -> Result<IdealDescriptor> {
        ideal_from_uf(&self.space, &self.field, &self.ultrafilter)
    }

    /// The seminorm axioms on a pair of functions.
    pub fn check_axioms(&self, f: &BoundedFunction, g: &BoundedFunction) -> Result<AxiomCheck> {
        let one =
            BoundedFunction::constant(self.space.clone(), self.field.clone(), self.field.one())?;
        let (nf, ng) = (self.eval(f)?, self.eval(g)?);
        Ok(AxiomCheck {
            unit: self.eval(&one)? == AbsValue::One,
            multiplicative: self.eval(&f.mul(g)?)? == nf * ng,
            bounded: nf <= f.sup_norm(),
            ultrametric: self.eval(&f.add(g)?)? <= nf.max(ng),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub unit: bool,
    pub multiplicative: bool,
    pub bounded: bool,
    pub ultrametric: bool,
}

impl AxiomCheck {
    pub fn all(&self) -> bool {
        self.unit && self.multiplicative && self.bounded && self.ultrametric
    }
}

/// One Berkovich point per ultrafilter of CO(X).
pub fn spectrum(space: &SpaceRef, field: &ValuedField) -> Vec<BerkovichPoint> {
    space
        .clopens()
        .algebra()
        .enumerate_ultrafilters()
        .into_iter()
        .map(|u| BerkovichPoint {
            space: space.clone(),
            field: field.clone(),
            ultrafilter: u,
        })
        .collect()
}

/// Index in UF(X) of each point's ultrafilter, if that assignment is a bijection.
pub fn spectrum_bijection(points: &[BerkovichPoint], uf: &UfSpace) -> Option<Vec<usize>> {
    let indices = points
        .iter()
        .map(|x| uf.index_of(&x.ultrafilter))
        .collect::<Option<Vec<_>>>()?;
    let hit = indices.iter().fold(0u64, |m, &i| m | 1 << i);
    (indices.len() == uf.len() && bits::count(hit) == uf.len()).then_some(indices)
}

/// Under `bijection`, `{x : |1_U|_x = 1}` is the basic open U_U for every clopen U.
pub fn spectrum_matches_basis(
    points: &[BerkovichPoint],
    uf: &UfSpace,
    bijection: &[usize],
) -> Result<bool> {
    let co = uf.clopens();
    let Some(first) = points.first() else {
        return Ok(uf.is_empty());
    };
    for u in co.algebra().elements() {
        let one_u =
            BoundedFunction::indicator(first.space.clone(), first.field.clone(), co.to_points(u))?;
        let mut open = 0u64;
        for (x, &i) in points.iter().zip(bijection) {
            if x.eval(&one_u)? == AbsValue::One {
                open |= 1 << i;
            }
        }
        if open != uf.basic_open(u) {
            return Ok(false);
        }
    }
    Ok(true)
}
