//! The ultrafilter space UF(X) := UF(CO(X)) of a finite space.
//!
//! UF(X) is topologized by the basis `U_a = {F : a ∈ F}` for clopen `a`.
//! At finite scale every ultrafilter is principal, so UF(X) is the discrete
//! space on the components of X.

use serde::Serialize;

use crate::balg::{Element, Filter, Ultrafilter};
use crate::bits;
use crate::error::{Error, Result};
use crate::topo::{ClopenAlgebra, ContinuousMap, FiniteSpace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UfSpace {
    base: FiniteSpace,
    co: ClopenAlgebra,
    ultrafilters: Vec<Ultrafilter>,
    // indexed by element of CO(X); mask over ultrafilter indices
    basis: Vec<u64>,
}

impl UfSpace {
    pub fn build(base: &FiniteSpace) -> Self {
        let co = base.clopens();
        let ultrafilters = co.algebra().enumerate_ultrafilters();
        let basis = co
            .algebra()
            .elements()
            .map(|a| {
                ultrafilters
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.contains(a))
                    .fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .collect();
        Self {
            base: base.clone(),
            co,
            ultrafilters,
            basis,
        }
    }

    pub fn base(&self) -> &FiniteSpace {
        &self.base
    }

    pub fn clopens(&self) -> &ClopenAlgebra {
        &self.co
    }

    pub fn ultrafilters(&self) -> &[Ultrafilter] {
        &self.ultrafilters
    }

    pub fn len(&self) -> usize {
        self.ultrafilters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ultrafilters.is_empty()
    }

    /// The basic open `U_a`, as a mask over ultrafilter indices.
    pub fn basic_open(&self, a: Element) -> u64 {
        self.basis[a.0 as usize]
    }

    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn index_of(&self, f: &Ultrafilter) -> Option<usize> {
        self.ultrafilters.iter().position(|g| g == f)
    }

    /// The realized finite topology, generated by the basis.
    pub fn to_space(&self) -> FiniteSpace {
        let labels = self
            .ultrafilters
            .iter()
            .map(|f| self.base.render(self.co.atom_points()[f.atom()]))
            .collect();
        FiniteSpace::generated(labels, self.basis.iter().copied())
            .expect("basis generates a valid topology")
    }

    /// `{U ∈ CO(X) : x ∈ U}`.
    pub fn principal(&self, point: usize) -> Result<Ultrafilter> {
        if point >= self.base.len() {
            return Err(Error::UnknownPoint(point.to_string()));
        }
        let members = self
            .co
            .algebra()
            .elements()
            .filter(|&a| bits::contains(self.co.to_points(a), point));
        Ultrafilter::try_from_filter(Filter::from_members(self.co.algebra(), members)?)
    }

    pub fn principal_by_label(&self, label: &str) -> Result<Ultrafilter> {
        self.principal(self.base.point_index(label)?)
    }

    /// The principal map X → UF(X), x ↦ F(x).
    pub fn principal_map(&self) -> ContinuousMap {
        let assignment = (0..self.base.len())
            .map(|x| {
                let f = self.principal(x).expect("point in range");
                self.index_of(&f)
                    .expect("principal ultrafilter is enumerated")
            })
            .collect();
        ContinuousMap::new(self.base.clone(), self.to_space(), assignment)
            .expect("indices in range")
    }

    /// ⋂F as a point set.
    pub fn cluster_points(&self, f: &Ultrafilter) -> Result<u64> {
        self.check_algebra(f)?;
        Ok(f.filter()
            .members()
            .iter()
            .fold(self.base.full(), |acc, &a| acc & self.co.to_points(a)))
    }

    /// Points all of whose clopen neighbourhoods lie in `f`.
    pub fn cluster_points_by_neighbourhoods(&self, f: &Ultrafilter) -> Result<u64> {
        self.check_algebra(f)?;
        let alg = self.co.algebra();
        Ok((0..self.base.len())
            .filter(|&x| {
                alg.elements()
                    .filter(|&a| bits::contains(self.co.to_points(a), x))
                    .all(|a| f.contains(a))
            })
            .fold(0, |m, x| m | 1 << x))
    }

    /// Every nonempty basic open meets the principal image.
    pub fn principal_image_dense(&self) -> bool {
        let image = self.principal_map().image(self.base.full());
        self.basis.iter().all(|&b| b == 0 || b & image != 0)
    }

    pub fn criterion_report(&self) -> CriterionReport {
        let basis_condition = clopens_form_basis(&self.base);
        let cluster_counts: Vec<usize> = self
            .ultrafilters
            .iter()
            .map(|f| bits::count(self.cluster_points(f).expect("own ultrafilter")))
            .collect();
        let compact = cluster_counts.iter().all(|&c| c >= 1);
        let hausdorff = cluster_counts.iter().all(|&c| c <= 1);
        let p = self.principal_map();
        let (surjective, injective, homeomorphism) =
            (p.is_surjective(), p.is_injective(), p.is_homeomorphism());
        CriterionReport {
            basis_condition,
            applicable: basis_condition,
            cluster_counts,
            compact: basis_condition.then_some(compact),
            hausdorff: basis_condition.then_some(hausdorff),
            td_compact_hausdorff: basis_condition.then_some(compact && hausdorff),
            principal_surjective: surjective,
            principal_injective: injective,
            principal_homeomorphism: homeomorphism,
            note: if basis_condition {
                "clopen sets form an open basis".into()
            } else {
                "criterion inapplicable: clopen sets do not form an open basis".into()
            },
        }
    }

    /// Checks UF(UF(X)) ≅ UF(X) via the principal map of the realized UF(X).
    pub fn check_idempotent(&self) -> bool {
        let realized = self.to_space();
        let twice = UfSpace::build(&realized);
        twice.len() == self.len() && twice.principal_map().is_homeomorphism()
    }

    pub fn describe(&self) -> UfDescription {
        let alg = self.co.algebra();
        let ultrafilters = self
            .ultrafilters
            .iter()
            .map(|f| UltrafilterDescription {
                minimum: self.base.labels_of(self.co.atom_points()[f.atom()]),
                members: f
                    .filter()
                    .members()
                    .iter()
                    .map(|&a| self.base.labels_of(self.co.to_points(a)))
                    .collect(),
                cluster_points: self
                    .base
                    .labels_of(self.cluster_points(f).expect("own ultrafilter")),
            })
            .collect();
        let basis = alg
            .elements()
            .map(|a| BasisDescription {
                clopen: self.base.labels_of(self.co.to_points(a)),
                ultrafilters: bits::iter(self.basic_open(a)).collect(),
            })
            .collect();
        UfDescription {
            points: self.base.points().to_vec(),
            ultrafilters,
            basis,
            criterion: self.criterion_report(),
            idempotent: self.check_idempotent(),
        }
    }

    fn check_algebra(&self, f: &Ultrafilter) -> Result<()> {
        if f.algebra() != self.co.algebra() {
            return Err(Error::Mismatch("ultrafilter algebra"));
        }
        Ok(())
    }
}

/// Whether every open set is a union of clopen sets.
pub fn clopens_form_basis(space: &FiniteSpace) -> bool {
    let clopens = space.clopen_sets();
    space.opens().iter().all(|&u| {
        clopens
            .iter()
            .filter(|&&c| bits::is_subset(c, u))
            .fold(0, |m, &c| m | c)
            == u
    })
}

/// `{U ∈ CO(Y) : f⁻¹(U) ∈ F}`.
pub fn pushforward(f: &ContinuousMap, ultrafilter: &Ultrafilter) -> Result<Ultrafilter> {
    f.check_continuous()?;
    let source_co = f.source().clopens();
    if ultrafilter.algebra() != source_co.algebra() {
        return Err(Error::Mismatch("ultrafilter algebra"));
    }
    let target_co = f.target().clopens();
    let members = target_co.algebra().elements().filter(|&u| {
        let pre = f.preimage(target_co.to_points(u));
        let pre = source_co
            .from_points(pre)
            .expect("preimage of a clopen under a continuous map is clopen");
        ultrafilter.contains(pre)
    });
    Ultrafilter::try_from_filter(Filter::from_members(target_co.algebra(), members)?)
}

/// The unique continuous extension UF(f): UF(X) → Y of `f: X → Y`.
#[derive(Clone, Debug)]
pub struct UfMap {
    uf: UfSpace,
    target: FiniteSpace,
    images: Vec<usize>,
}

impl UfMap {
    pub fn new(f: &ContinuousMap) -> Result<Self> {
        f.check_continuous()?;
        if !f.target().is_discrete() {
            return Err(Error::TargetNotHausdorff);
        }
        let uf = UfSpace::build(f.source());
        let target_uf = UfSpace::build(f.target());
        let images = uf
            .ultrafilters()
            .iter()
            .map(|u| {
                let pushed = pushforward(f, u)?;
                let cluster = target_uf.cluster_points(&pushed)?;
                if bits::count(cluster) != 1 {
                    return Err(Error::TargetNotHausdorff);
                }
                Ok(bits::lowest(cluster).unwrap())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            uf,
            target: f.target().clone(),
            images,
        })
    }

    pub fn uf(&self) -> &UfSpace {
        &self.uf
    }

    /// Image of each ultrafilter, by index.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn as_map(&self) -> ContinuousMap {
        ContinuousMap::new(self.uf.to_space(), self.target.clone(), self.images.clone())
            .expect("indices in range")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub basis_condition: bool,
    pub applicable: bool,
    pub cluster_counts: Vec<usize>,
    pub compact: Option<bool>,
    pub hausdorff: Option<bool>,
    pub td_compact_hausdorff: Option<bool>,
    pub principal_surjective: bool,
    pub principal_injective: bool,
    pub principal_homeomorphism: bool,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct UltrafilterDescription {
    pub minimum: Vec<String>,
    pub members: Vec<Vec<String>>,
    pub cluster_points: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisDescription {
    pub clopen: Vec<String>,
    pub ultrafilters: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UfDescription {
    pub points: Vec<String>,
    pub ultrafilters: Vec<UltrafilterDescription>,
    pub basis: Vec<BasisDescription>,
    pub criterion: CriterionReport,
    pub idempotent: bool,
}
