//! Evaluation embeddings, extension to UF(X), separation quotients,
//! locally constant approximation and ground field extension.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::funcalg::{BoundedFunction, SpaceRef};
use crate::topo::{ContinuousMap, FiniteSpace, Partition};
use crate::ufspace::UfSpace;
use crate::valfield::{AbsValue, Scalar, ValuedField};

/// y ↦ (1_U(y))_U over all clopen U, with the image carrying the topology
/// induced from the product of the coordinate value sets.
#[derive(Clone, Debug)]
pub struct EvaluationEmbedding {
    pub coordinates: Vec<BoundedFunction>,
    pub image: FiniteSpace,
    pub map: ContinuousMap,
    pub verdict: EmbeddingVerdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingVerdict {
    pub injective: bool,
    pub open_onto_image: bool,
    pub homeomorphism: bool,
    pub integral_coordinates: bool,
}

pub fn sc_embed(space: &SpaceRef, field: &ValuedField) -> EvaluationEmbedding {
    let coordinates: Vec<BoundedFunction> = space
        .clopen_sets()
        .into_iter()
        .map(|u| BoundedFunction::indicator(space.clone(), field.clone(), u).expect("clopen"))
        .collect();
    let vector = |y: usize| -> Vec<&Scalar> { coordinates.iter().map(|c| c.value(y)).collect() };

    let mut image_points: Vec<Vec<&Scalar>> = Vec::new();
    let mut assignment = Vec::with_capacity(space.len());
    for y in 0..space.len() {
        let v = vector(y);
        let idx = image_points
            .iter()
            .position(|w| *w == v)
            .unwrap_or_else(|| {
                image_points.push(v);
                image_points.len() - 1
            });
        assignment.push(idx);
    }
    let labels: Vec<String> = image_points
        .iter()
        .map(|v| {
            let body: Vec<String> = v.iter().map(|s| field.format_scalar(s)).collect();
            format!("({})", body.join(","))
        })
        .collect();
    // subbasis: for each coordinate and each value it takes, the image points with that value
    let mut subbasis = Vec::new();
    for j in 0..coordinates.len() {
        for value in image_points.iter().map(|v| v[j]) {
            let set = image_points
                .iter()
                .enumerate()
                .filter(|(_, w)| w[j] == value)
                .fold(0u64, |m, (i, _)| m | 1 << i);
            subbasis.push(set);
        }
    }
    let image = FiniteSpace::generated(labels, subbasis).expect("image is finite");
    let map = ContinuousMap::new((**space).clone(), image.clone(), assignment).expect("in range");
    let injective = map.is_injective();
    let open_onto_image = map.is_open_map();
    let verdict = EmbeddingVerdict {
        injective,
        open_onto_image,
        homeomorphism: injective && open_onto_image && map.is_continuous(),
        integral_coordinates: coordinates
            .iter()
            .all(|c| c.values().iter().all(|v| field.is_integral(v))),
    };
    EvaluationEmbedding {
        coordinates,
        image,
        map,
        verdict,
    }
}

/// A k-valued function on UF(X), indexed like [`UfSpace::ultrafilters`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedFunction {
    pub uf: UfSpace,
    pub field: ValuedField,
    pub values: Vec<Scalar>,
}

impl ExtendedFunction {
    pub fn sup_norm(&self) -> AbsValue {
        self.values
            .iter()
            .map(|v| self.field.abs(v))
            .max()
            .unwrap_or(AbsValue::Zero)
    }

    /// The composite with the principal map X → UF(X).
    pub fn restrict_to_base(&self) -> Result<BoundedFunction> {
        let principal = self.uf.principal_map();
        let values = (0..self.uf.base().len())
            .map(|x| self.values[principal.apply(x)].clone())
            .collect();
        BoundedFunction::new(Arc::new(self.uf.base().clone()), self.field.clone(), values)
    }
}

/// Extends f to UF(X) through a scaling element of magnitude ‖f‖.
pub fn extend_function(f: &BoundedFunction) -> Result<ExtendedFunction> {
    let k = f.field();
    let a = k
        .element_of_magnitude(f.sup_norm())
        .filter(|a| !k.is_zero(a))
        .unwrap_or_else(|| k.one());
    extend_function_scaled(f, &a)
}

/// Extends f as `a · ext(a⁻¹ f)`, where `a⁻¹ f` takes values in k° and is
/// extended coordinatewise: each ultrafilter gets the value on its minimum.
pub fn extend_function_scaled(f: &BoundedFunction, a: &Scalar) -> Result<ExtendedFunction> {
    let k = f.field();
    k.check(a)?;
    if k.is_zero(a) || k.abs(a) < f.sup_norm() {
        return Err(Error::BadScale);
    }
    let a_inv = k.inv(a)?;
    let integral = f.scale(&a_inv);
    debug_assert!(integral.values().iter().all(|v| k.is_integral(v)));
    let uf = UfSpace::build(f.space());
    let values = uf
        .ultrafilters()
        .iter()
        .map(|u| k.mul(a, integral.component_value(u.atom())))
        .collect();
    Ok(ExtendedFunction {
        uf,
        field: k.clone(),
        values,
    })
}

/// A closed subalgebra of C(X,k), described by finitely many generators.
#[derive(Clone, Debug)]
pub struct SubalgebraDescriptor {
    pub space: SpaceRef,
    pub field: ValuedField,
    pub generators: Vec<BoundedFunction>,
}

impl SubalgebraDescriptor {
    pub fn new(
        space: SpaceRef,
        field: ValuedField,
        generators: Vec<BoundedFunction>,
    ) -> Result<Self> {
        if generators
            .iter()
            .any(|g| **g.space() != *space || *g.field() != field)
        {
            return Err(Error::Mismatch("generator space or field"));
        }
        Ok(Self {
            space,
            field,
            generators,
        })
    }

    pub fn constants(space: SpaceRef, field: ValuedField) -> Result<Self> {
        let one = BoundedFunction::constant(space.clone(), field.clone(), field.one())?;
        Self::new(space, field, vec![one])
    }

    /// All clopen indicators: generates the whole algebra.
    pub fn full(space: SpaceRef, field: ValuedField) -> Result<Self> {
        let gens = space
            .clopen_sets()
            .into_iter()
            .map(|u| BoundedFunction::indicator(space.clone(), field.clone(), u))
            .collect::<Result<Vec<_>>>()?;
        Self::new(space, field, gens)
    }

    /// Indicators of the blocks; blocks must be clopen.
    pub fn from_partition(
        space: SpaceRef,
        field: ValuedField,
        partition: &Partition,
    ) -> Result<Self> {
        let gens = partition
            .blocks()
            .iter()
            .map(|&b| BoundedFunction::indicator(space.clone(), field.clone(), b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(space, field, gens)
    }

    /// x ~ x′ iff every generator agrees on x and x′.
    pub fn separation_relation(&self) -> Partition {
        let mut blocks: Vec<u64> = Vec::new();
        for x in 0..self.space.len() {
            let found = blocks.iter_mut().find(|b| {
                let y = bits::lowest(**b).unwrap();
                self.generators.iter().all(|g| g.value(x) == g.value(y))
            });
            match found {
                Some(b) => *b |= 1 << x,
                None => blocks.push(1 << x),
            }
        }
        Partition::from_masks(self.space.len(), blocks).expect("blocks partition the points")
    }

    /// Adds pairwise sums and products and a scalar multiple of each generator.
    pub fn enlarge(&self) -> Self {
        let k = &self.field;
        let two = k.from_int(2);
        let mut gens = self.generators.clone();
        for (i, a) in self.generators.iter().enumerate() {
            gens.push(a.scale(&two));
            for b in &self.generators[i..] {
                gens.push(a.add(b).expect("same space"));
                gens.push(a.mul(b).expect("same space"));
            }
        }
        Self {
            space: self.space.clone(),
            field: self.field.clone(),
            generators: gens,
        }
    }
}

pub fn separation_quotient(
    sub: &SubalgebraDescriptor,
) -> Result<(Partition, FiniteSpace, ContinuousMap)> {
    let partition = sub.separation_relation();
    let (quotient, projection) = sub.space.quotient(&partition)?;
    Ok((partition, quotient, projection))
}

/// partition → subalgebra of block indicators → separation relation, which
/// must recover the partition; the relation is also stable under enlarging
/// the generator set and under a second round trip.
pub fn gelfand_roundtrip(
    space: &SpaceRef,
    field: &ValuedField,
    partition: &Partition,
) -> Result<bool> {
    if !space.is_discrete() {
        return Err(Error::InvalidSpace(
            "the partition correspondence needs a discrete space".into(),
        ));
    }
    if partition.num_points() != space.len() {
        return Err(Error::InvalidPartition(
            "partition does not match the space".into(),
        ));
    }
    let forward = SubalgebraDescriptor::from_partition(space.clone(), field.clone(), partition)?;
    let (back, _, projection) = separation_quotient(&forward)?;
    let stable = forward.enlarge().separation_relation() == back;
    let again = SubalgebraDescriptor::from_partition(space.clone(), field.clone(), &back)?
        .separation_relation()
        == back;
    Ok(back == *partition && stable && again && projection.is_continuous())
}

#[derive(Clone, Debug)]
pub struct Approximation {
    pub blocks: Partition,
    pub g: BoundedFunction,
}

/// Groups points greedily (in point order) into open discs of radius ε
/// around each block's first point, then takes g = f(first point) on each block.
pub fn locally_constant_approx(f: &BoundedFunction, epsilon: AbsValue) -> Result<Approximation> {
    if epsilon.is_zero() {
        return Err(Error::ZeroRadius);
    }
    let k = f.field();
    let mut blocks: Vec<u64> = Vec::new();
    for x in 0..f.space().len() {
        let home = blocks.iter_mut().find(|b| {
            let rep = bits::lowest(**b).unwrap();
            k.abs(&k.sub(f.value(x), f.value(rep))) < epsilon
        });
        match home {
            Some(b) => *b |= 1 << x,
            None => blocks.push(1 << x),
        }
    }
    let blocks = Partition::from_masks(f.space().len(), blocks)?;
    let values = (0..f.space().len())
        .map(|x| {
            let rep = bits::lowest(blocks.blocks()[blocks.block_of(x)]).unwrap();
            f.value(rep).clone()
        })
        .collect();
    let g = BoundedFunction::new(f.space().clone(), k.clone(), values)?;
    Ok(Approximation { blocks, g })
}

/// f = Σ a_U 1_U over the level sets of f (unions of components), zero terms dropped.
#[derive(Clone, Debug)]
pub struct IdempotentWitness {
    pub terms: Vec<(Scalar, u64)>,
    pub exact: bool,
}

pub fn idempotent_density_check(f: &BoundedFunction) -> Result<IdempotentWitness> {
    let k = f.field();
    let space = f.space();
    let mut levels: Vec<(Scalar, u64)> = Vec::new();
    for c in space.components() {
        let v = f.value(bits::lowest(*c).unwrap());
        match levels.iter_mut().find(|(a, _)| a == v) {
            Some((_, set)) => *set |= c,
            None => levels.push((v.clone(), *c)),
        }
    }
    let terms: Vec<(Scalar, u64)> = levels.into_iter().filter(|(a, _)| !k.is_zero(a)).collect();
    let mut sum = BoundedFunction::zero(space.clone(), k.clone());
    for (a, set) in &terms {
        let idem = BoundedFunction::indicator(space.clone(), k.clone(), *set)?;
        sum = sum.add(&idem.scale(a))?;
    }
    Ok(IdempotentWitness {
        exact: sum == *f,
        terms,
    })
}

/// Catalogue extensions K/k with a known orthogonal k-basis of K.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Extension {
    /// F4 over F2, basis {1, ω} with ω² = ω + 1.
    F4OverF2,
    /// Q(i) over Q, trivially valued, basis {1, i}.
    GaussianOverQ,
}

impl std::str::FromStr for Extension {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "F4/F2" => Ok(Extension::F4OverF2),
            "Q(i)/Q" => Ok(Extension::GaussianOverQ),
            other => Err(Error::UnsupportedExtension(other.to_string())),
        }
    }
}

impl Extension {
    pub fn base_field(self) -> ValuedField {
        match self {
            Extension::F4OverF2 => ValuedField::finite(2).expect("F2"),
            Extension::GaussianOverQ => ValuedField::TrivialRational,
        }
    }

    pub fn ext_field(self) -> ValuedField {
        match self {
            Extension::F4OverF2 => ValuedField::finite(4).expect("F4"),
            Extension::GaussianOverQ => ValuedField::TrivialGaussian,
        }
    }

    pub fn basis(self) -> Vec<Scalar> {
        match self {
            Extension::F4OverF2 => vec![Scalar::Finite(vec![1, 0]), Scalar::Finite(vec![0, 1])],
            Extension::GaussianOverQ => {
                let k = ValuedField::TrivialGaussian;
                vec![k.one(), k.parse_scalar("i").expect("i")]
            }
        }
    }

    pub fn embed(self, x: &Scalar) -> Scalar {
        match (self, x) {
            (Extension::F4OverF2, Scalar::Finite(v)) => Scalar::Finite(vec![v[0], 0]),
            (Extension::GaussianOverQ, Scalar::Rational(r)) => {
                Scalar::Gaussian(r.clone(), BigRational::zero())
            }
            _ => panic!("scalar not in the base field"),
        }
    }

    /// Coordinates of `c ∈ K` in [`Self::basis`].
    pub fn coordinates(self, c: &Scalar) -> Vec<Scalar> {
        match (self, c) {
            (Extension::F4OverF2, Scalar::Finite(v)) => {
                vec![Scalar::Finite(vec![v[0]]), Scalar::Finite(vec![v[1]])]
            }
            (Extension::GaussianOverQ, Scalar::Gaussian(a, b)) => {
                vec![Scalar::Rational(a.clone()), Scalar::Rational(b.clone())]
            }
            _ => panic!("scalar not in the extension field"),
        }
    }
}

/// Σ c_i ⊗ g_i in K ⊗_k C(X,k).
#[derive(Clone, Debug)]
pub struct TensorElement {
    pub extension: Extension,
    pub space: SpaceRef,
    pub terms: Vec<(Scalar, BoundedFunction)>,
}

impl TensorElement {
    pub fn new(
        extension: Extension,
        space: SpaceRef,
        terms: Vec<(Scalar, BoundedFunction)>,
    ) -> Result<Self> {
        let (k, big) = (extension.base_field(), extension.ext_field());
        for (c, g) in &terms {
            big.check(c)?;
            if *g.field() != k || **g.space() != *space {
                return Err(Error::Mismatch("tensor term space or field"));
            }
        }
        Ok(Self {
            extension,
            space,
            terms,
        })
    }

    /// The unique g″_j with Σ c_i ⊗ g_i = Σ b_j ⊗ g″_j.
    pub fn canonical_presentation(&self) -> Vec<BoundedFunction> {
        let k = self.extension.base_field();
        let m = self.extension.basis().len();
        let mut out = vec![BoundedFunction::zero(self.space.clone(), k.clone()); m];
        for (c, g) in &self.terms {
            for (j, cj) in self.extension.coordinates(c).iter().enumerate() {
                out[j] = out[j].add(&g.scale(cj)).expect("same space");
            }
        }
        out
    }

    /// max_j |b_j| · ‖g″_j‖.
    pub fn tensor_norm(&self) -> AbsValue {
        let big = self.extension.ext_field();
        self.extension
            .basis()
            .iter()
            .zip(self.canonical_presentation())
            .map(|(b, g)| big.abs(b) * g.sup_norm())
            .max()
            .unwrap_or(AbsValue::Zero)
    }

    /// max_i |c_i| · ‖g_i‖ over the presentation as given.
    pub fn naive_bound(&self) -> AbsValue {
        let big = self.extension.ext_field();
        self.terms
            .iter()
            .map(|(c, g)| big.abs(c) * g.sup_norm())
            .max()
            .unwrap_or(AbsValue::Zero)
    }

    /// ι_{K/k}(t): x ↦ Σ c_i g_i(x) in K.
    pub fn apply_extension(&self) -> Result<BoundedFunction> {
        let big = self.extension.ext_field();
        let values = (0..self.space.len())
            .map(|x| {
                self.terms.iter().fold(big.zero(), |acc, (c, g)| {
                    big.add(&acc, &big.mul(c, &self.extension.embed(g.value(x))))
                })
            })
            .collect();
        BoundedFunction::new(self.space.clone(), big, values)
    }

    pub fn isometry_check(&self) -> Result<bool> {
        Ok(self.apply_extension()?.sup_norm() == self.tensor_norm())
    }
}
