//! Finite Boolean algebras, their F2-algebra structure, and the filter lattice.
//!
//! Every finite Boolean algebra is the powerset of its atoms, so an algebra is
//! described by an ordered atom list and an element is a bitmask over atom
//! indices. Filters are stored canonically as their full member set.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};

/// Filters are stored explicitly, so the carrier (2^atoms) must stay enumerable.
pub const MAX_ATOMS: usize = 20;

/// An element of a [`BoolAlg`]: the set of atoms lying below it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Element(pub u64);

impl Element {
    pub fn atoms(self) -> impl Iterator<Item = usize> {
        bits::iter(self.0)
    }

    pub fn is_bottom(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, a) in self.atoms().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoolAlg {
    atoms: Vec<String>,
}

impl BoolAlg {
    pub fn new(atoms: Vec<String>) -> Result<Self> {
        if atoms.len() > MAX_ATOMS {
            return Err(Error::AlgebraTooLarge(atoms.len(), MAX_ATOMS));
        }
        Ok(Self { atoms })
    }

    /// The powerset algebra 2^{1,..,n} with atoms labelled `"1"`..`"n"`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()).collect())
    }

    pub fn atom_labels(&self) -> &[String] {
        &self.atoms
    }

    pub fn num_atoms(&self) -> usize {
        self.atoms.len()
    }

    pub fn num_elements(&self) -> usize {
        1usize << self.atoms.len()
    }

    pub fn bottom(&self) -> Element {
        Element(0)
    }

    pub fn top(&self) -> Element {
        Element(bits::full(self.atoms.len()))
    }

    pub fn atom(&self, i: usize) -> Element {
        assert!(i < self.atoms.len(), "atom index {i} out of range");
        Element(1 << i)
    }

    pub fn is_member(&self, a: Element) -> bool {
        bits::is_subset(a.0, self.top().0)
    }

    pub fn check(&self, a: Element) -> Result<Element> {
        if self.is_member(a) {
            Ok(a)
        } else {
            Err(Error::ForeignElement(a.0, self.num_atoms()))
        }
    }

    /// All elements, in increasing bitmask order.
    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.num_elements() as u64).map(Element)
    }

    pub fn join(&self, a: Element, b: Element) -> Element {
        Element(a.0 | b.0)
    }

    pub fn meet(&self, a: Element, b: Element) -> Element {
        Element(a.0 & b.0)
    }

    pub fn not(&self, a: Element) -> Element {
        Element(!a.0 & self.top().0)
    }

    pub fn leq(&self, a: Element, b: Element) -> bool {
        bits::is_subset(a.0, b.0)
    }

    /// Addition of the induced F2-algebra: (a ∨ b) ∧ ¬(a ∧ b).
    pub fn f2_add(&self, a: Element, b: Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.meet(self.join(a, b), self.not(self.meet(a, b))))
    }

    /// Multiplication of the induced F2-algebra: a ∧ b.
    pub fn f2_mul(&self, a: Element, b: Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.meet(a, b))
    }

    pub fn enumerate_ultrafilters(&self) -> Vec<Ultrafilter> {
        (0..self.num_atoms())
            .map(|i| Ultrafilter::at_atom(self, i))
            .collect()
    }
}

/// A filter, stored as its full member set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filter {
    alg: BoolAlg,
    members: BTreeSet<Element>,
}

impl Filter {
    /// Validates an explicit member set against the filter axioms.
    pub fn from_members(alg: &BoolAlg, members: impl IntoIterator<Item = Element>) -> Result<Self> {
        let members = members
            .into_iter()
            .map(|a| alg.check(a))
            .collect::<Result<BTreeSet<_>>>()?;
        if !members.contains(&alg.top()) {
            return Err(Error::NotAFilter("top element missing".into()));
        }
        for &a in &members {
            for &b in &members {
                if !members.contains(&alg.meet(a, b)) {
                    return Err(Error::NotAFilter(format!("{a} ∧ {b} missing")));
                }
            }
            for b in alg.elements() {
                if !members.contains(&alg.join(a, b)) {
                    return Err(Error::NotAFilter(format!("{a} ∨ {b} missing")));
                }
            }
        }
        Ok(Self {
            alg: alg.clone(),
            members,
        })
    }

    /// The filter generated by `generators`: all `(a1 ∧ … ∧ an) ∨ b` with
    /// `ai` generators and `b` arbitrary. The empty wedge is ⊤.
    pub fn generated(alg: &BoolAlg, generators: &[Element]) -> Result<Self> {
        let mut wedges = BTreeSet::from([alg.top()]);
        for &s in generators {
            alg.check(s)?;
            let extra: Vec<_> = wedges.iter().map(|&w| alg.meet(w, s)).collect();
            wedges.extend(extra);
        }
        let members = wedges
            .iter()
            .flat_map(|&w| alg.elements().map(move |b| Element(w.0 | b.0)))
            .collect();
        Ok(Self {
            alg: alg.clone(),
            members,
        })
    }

    /// Upward closure of a single element.
    pub fn principal(alg: &BoolAlg, a: Element) -> Result<Self> {
        Self::generated(alg, &[alg.check(a)?])
    }

    pub fn whole(alg: &BoolAlg) -> Self {
        Self {
            alg: alg.clone(),
            members: alg.elements().collect(),
        }
    }

    pub fn algebra(&self) -> &BoolAlg {
        &self.alg
    }

    pub fn members(&self) -> &BTreeSet<Element> {
        &self.members
    }

    pub fn contains(&self, a: Element) -> bool {
        self.members.contains(&a)
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(self.alg.bottom())
    }

    pub fn is_subset_of(&self, other: &Filter) -> bool {
        self.alg == other.alg && self.members.is_subset(&other.members)
    }

    /// Meet of all members; exists because the algebra is finite.
    pub fn minimum(&self) -> Element {
        self.members
            .iter()
            .fold(self.alg.top(), |acc, &a| self.alg.meet(acc, a))
    }

    /// Checks conditions (i)′–(iv)′ literally.
    pub fn is_ultrafilter(&self) -> bool {
        let alg = &self.alg;
        let proper = !self.contains(alg.bottom());
        let meet_closed = self
            .members
            .iter()
            .all(|&a| self.members.iter().all(|&b| self.contains(alg.meet(a, b))));
        let absorbing = self
            .members
            .iter()
            .all(|&a| alg.elements().all(|b| self.contains(alg.join(a, b))));
        let decisive = alg
            .elements()
            .all(|a| self.contains(a) || self.contains(alg.not(a)));
        proper && meet_closed && absorbing && decisive
    }

    /// Extends a proper filter to an ultrafilter, choosing the lowest-indexed
    /// atom below the filter's minimum.
    pub fn extend_to_ultrafilter(&self) -> Result<Ultrafilter> {
        let min = self.minimum();
        let atom = bits::lowest(min.0).ok_or(Error::ImproperFilter)?;
        Ok(Ultrafilter::at_atom(&self.alg, atom))
    }
}

/// An ultrafilter of a finite Boolean algebra: the upward closure of an atom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ultrafilter {
    filter: Filter,
    atom: usize,
}

impl Ultrafilter {
    pub fn at_atom(alg: &BoolAlg, atom: usize) -> Self {
        let filter = Filter::principal(alg, alg.atom(atom)).expect("atom is a member");
        Self { filter, atom }
    }

    pub fn try_from_filter(filter: Filter) -> Result<Self> {
        if !filter.is_ultrafilter() {
            return Err(Error::NotAFilter("filter is not an ultrafilter".into()));
        }
        let atom = bits::lowest(filter.minimum().0).expect("ultrafilters are proper");
        Ok(Self { filter, atom })
    }

    /// Index of the atom generating this ultrafilter.
    pub fn atom(&self) -> usize {
        self.atom
    }

    pub fn minimum(&self) -> Element {
        Element(1 << self.atom)
    }

    pub fn filter(&self) -> &Filter {
        &self.filter
    }

    pub fn algebra(&self) -> &BoolAlg {
        self.filter.algebra()
    }

    pub fn contains(&self, a: Element) -> bool {
        self.filter.contains(a)
    }
}
