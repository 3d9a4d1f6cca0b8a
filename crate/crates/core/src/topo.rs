//! Finite topological spaces given by explicit open-set families.
//!
//! Points are opaque string labels; internally every subset is a `u64`
//! bitmask over point indices, so a space holds at most
//! [`bits::MAX_POINTS`] points.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::balg::{BoolAlg, Element};
use crate::bits;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    points: Vec<String>,
    opens: Vec<u64>,
    // derived: connected components ordered by their lowest point
    components: Vec<u64>,
    component_of: Vec<usize>,
}

impl FiniteSpace {
    /// Validates an open-set family given as point-index bitmasks.
    ///
    /// The family must contain ∅ and the whole space and be closed under
    /// pairwise union and intersection; it is never auto-completed.
    pub fn new(points: Vec<String>, opens: impl IntoIterator<Item = u64>) -> Result<Self> {
        let n = points.len();
        if n > bits::MAX_POINTS {
            return Err(Error::InvalidSpace(format!(
                "{n} points exceeds the maximum of {}",
                bits::MAX_POINTS
            )));
        }
        let mut seen = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if let Some(j) = seen.insert(p.as_str(), i) {
                return Err(Error::InvalidSpace(format!(
                    "duplicate point `{p}` at positions {j} and {i}"
                )));
            }
        }
        let full = bits::full(n);
        let opens: BTreeSet<u64> = opens.into_iter().collect();
        let render = |s: u64| render_set(&points, s);
        if let Some(&bad) = opens.iter().find(|&&u| !bits::is_subset(u, full)) {
            return Err(Error::InvalidSpace(format!(
                "open set {bad:#b} mentions points outside the space"
            )));
        }
        if !opens.contains(&0) {
            return Err(Error::InvalidSpace(
                "opens must contain the empty set".into(),
            ));
        }
        if !opens.contains(&full) {
            return Err(Error::InvalidSpace(
                "opens must contain the whole point set".into(),
            ));
        }
        for &a in &opens {
            for &b in &opens {
                if !opens.contains(&(a | b)) {
                    return Err(Error::InvalidSpace(format!(
                        "opens not closed under union: {} ∪ {} = {} is missing",
                        render(a),
                        render(b),
                        render(a | b)
                    )));
                }
                if !opens.contains(&(a & b)) {
                    return Err(Error::InvalidSpace(format!(
                        "opens not closed under intersection: {} ∩ {} = {} is missing",
                        render(a),
                        render(b),
                        render(a & b)
                    )));
                }
            }
        }
        let opens: Vec<u64> = opens.into_iter().collect();
        let (components, component_of) = separate(n, &opens);
        Ok(Self {
            points,
            opens,
            components,
            component_of,
        })
    }

    /// Builds a space from labelled open sets.
    pub fn from_labels(points: Vec<String>, opens: &[Vec<String>]) -> Result<Self> {
        let index: HashMap<&str, usize> = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_str(), i))
            .collect();
        let masks = opens
            .iter()
            .map(|open| {
                open.iter().try_fold(0u64, |m, p| {
                    index
                        .get(p.as_str())
                        .map(|&i| m | 1 << i)
                        .ok_or_else(|| Error::UnknownPoint(p.clone()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(points, masks)
    }

    /// The coarsest topology containing `subbasis`, ∅ and the whole space:
    /// all unions of the minimal neighbourhoods U_x = ⋂{S ∈ subbasis : x ∈ S}.
    pub fn generated(points: Vec<String>, subbasis: impl IntoIterator<Item = u64>) -> Result<Self> {
        let n = points.len();
        if n > bits::MAX_POINTS {
            return Err(Error::InvalidSpace(format!(
                "{n} points exceeds the maximum of {}",
                bits::MAX_POINTS
            )));
        }
        let full = bits::full(n);
        let subbasis: Vec<u64> = subbasis.into_iter().map(|s| s & full).collect();
        let mut opens: BTreeSet<u64> = [0].into();
        for x in 0..n {
            let nbhd = subbasis
                .iter()
                .filter(|&&s| bits::contains(s, x))
                .fold(full, |m, &s| m & s);
            let grown: Vec<u64> = opens.iter().map(|&o| o | nbhd).collect();
            opens.extend(grown);
        }
        Self::new(points, opens)
    }

    pub fn empty() -> Self {
        Self::new(vec![], [0]).expect("empty space is valid")
    }

    pub fn discrete(points: Vec<String>) -> Result<Self> {
        let n = points.len();
        if n > 16 {
            return Err(Error::InvalidSpace(format!(
                "discrete space on {n} points has too many opens to list"
            )));
        }
        Self::new(points, 0..=bits::full(n))
    }

    /// Discrete space on points labelled `"1"`..`"n"`.
    pub fn discrete_numbered(n: usize) -> Result<Self> {
        Self::discrete(numbered(n))
    }

    pub fn indiscrete(points: Vec<String>) -> Result<Self> {
        let full = bits::full(points.len());
        Self::new(points, [0, full])
    }

    /// Points `0`, `1` with opens ∅, {1}, {0,1}.
    pub fn sierpinski() -> Self {
        Self::new(vec!["0".into(), "1".into()], [0, 0b10, 0b11]).expect("valid")
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn full(&self) -> u64 {
        bits::full(self.len())
    }

    pub fn opens(&self) -> &[u64] {
        &self.opens
    }

    pub fn is_open(&self, set: u64) -> bool {
        self.opens.binary_search(&set).is_ok()
    }

    pub fn is_closed(&self, set: u64) -> bool {
        bits::is_subset(set, self.full()) && self.is_open(self.full() & !set)
    }

    pub fn is_clopen(&self, set: u64) -> bool {
        self.is_open(set) && self.is_closed(set)
    }

    /// Every clopen subset, ascending.
    pub fn clopen_sets(&self) -> Vec<u64> {
        self.opens
            .iter()
            .copied()
            .filter(|&u| self.is_closed(u))
            .collect()
    }

    /// Connected components, ordered by their lowest point.
    pub fn components(&self) -> &[u64] {
        &self.components
    }

    pub fn component_of(&self, point: usize) -> usize {
        self.component_of[point]
    }

    pub fn component_partition(&self) -> Partition {
        Partition {
            n: self.len(),
            blocks: self.components.clone(),
        }
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.len()).all(|i| self.is_open(1 << i))
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn point_index(&self, label: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == label)
            .ok_or_else(|| Error::UnknownPoint(label.to_string()))
    }

    pub fn labels_of(&self, set: u64) -> Vec<String> {
        bits::iter(set).map(|i| self.points[i].clone()).collect()
    }

    pub fn render(&self, set: u64) -> String {
        render_set(&self.points, set)
    }

    /// The Boolean algebra CO(X) of clopen subsets; its atoms are the components.
    pub fn clopens(&self) -> ClopenAlgebra {
        let labels = self.components.iter().map(|&c| self.render(c)).collect();
        ClopenAlgebra {
            algebra: BoolAlg::new(labels).expect("component count within algebra limits"),
            atom_points: self.components.clone(),
            component_of: self.component_of.clone(),
        }
    }

    /// Quotient by a partition: a set of blocks is open iff its preimage is.
    pub fn quotient(&self, partition: &Partition) -> Result<(FiniteSpace, ContinuousMap)> {
        if partition.n != self.len() {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} points, space has {}",
                partition.n,
                self.len()
            )));
        }
        let labels = partition
            .blocks
            .iter()
            .map(|&b| {
                if bits::count(b) == 1 {
                    self.points[bits::lowest(b).unwrap()].clone()
                } else {
                    self.render(b)
                }
            })
            .collect::<Vec<_>>();
        let opens = self.opens.iter().filter_map(|&u| {
            let mut image = 0u64;
            for (j, &b) in partition.blocks.iter().enumerate() {
                if b & u != 0 {
                    if !bits::is_subset(b, u) {
                        return None;
                    }
                    image |= 1 << j;
                }
            }
            Some(image)
        });
        let quotient = FiniteSpace::new(labels, opens.collect::<Vec<_>>())?;
        let assignment = (0..self.len()).map(|i| partition.block_of(i)).collect();
        let projection = ContinuousMap::new(self.clone(), quotient.clone(), assignment)?;
        Ok((quotient, projection))
    }
}

impl fmt::Display for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(self.full()))
    }
}

pub fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn render_set(points: &[String], set: u64) -> String {
    let inner: Vec<&str> = bits::iter(set).map(|i| points[i].as_str()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Points are grouped together when no clopen set separates them.
fn separate(n: usize, opens: &[u64]) -> (Vec<u64>, Vec<usize>) {
    let full = bits::full(n);
    let open_set: BTreeSet<u64> = opens.iter().copied().collect();
    let clopens: Vec<u64> = opens
        .iter()
        .copied()
        .filter(|&u| open_set.contains(&(full & !u)))
        .collect();
    let mut components: Vec<u64> = Vec::new();
    let mut component_of = vec![usize::MAX; n];
    for i in 0..n {
        if component_of[i] != usize::MAX {
            continue;
        }
        let block = clopens
            .iter()
            .filter(|&&c| bits::contains(c, i))
            .fold(full, |acc, &c| acc & c);
        for j in bits::iter(block) {
            component_of[j] = components.len();
        }
        components.push(block);
    }
    (components, component_of)
}

/// CO(X) together with the identification of its atoms with components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClopenAlgebra {
    algebra: BoolAlg,
    atom_points: Vec<u64>,
    component_of: Vec<usize>,
}

impl ClopenAlgebra {
    pub fn algebra(&self) -> &BoolAlg {
        &self.algebra
    }

    pub fn atom_points(&self) -> &[u64] {
        &self.atom_points
    }

    pub fn to_points(&self, a: Element) -> u64 {
        a.atoms().fold(0, |m, i| m | self.atom_points[i])
    }

    /// The element for a point set, if that set is a union of components.
    pub fn from_points(&self, set: u64) -> Option<Element> {
        let mut element = 0u64;
        let mut covered = 0u64;
        for i in bits::iter(set) {
            let c = *self.component_of.get(i)?;
            element |= 1 << c;
            covered |= self.atom_points[c];
        }
        (covered == set).then_some(Element(element))
    }

    /// All clopen subsets as point masks, in element order.
    pub fn carrier(&self) -> Vec<u64> {
        self.algebra.elements().map(|a| self.to_points(a)).collect()
    }

    /// Atom (component index) containing a point.
    pub fn atom_of(&self, point: usize) -> usize {
        self.component_of[point]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuousMap {
    source: FiniteSpace,
    target: FiniteSpace,
    assignment: Vec<usize>,
}

impl ContinuousMap {
    /// Builds a point map. Continuity is not enforced; see [`Self::is_continuous`].
    pub fn new(source: FiniteSpace, target: FiniteSpace, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(Error::InvalidMap(format!(
                "assignment has {} entries for {} source points",
                assignment.len(),
                source.len()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&y| y >= target.len()) {
            return Err(Error::InvalidMap(format!(
                "target index {bad} out of range"
            )));
        }
        Ok(Self {
            source,
            target,
            assignment,
        })
    }

    pub fn from_labels(
        source: FiniteSpace,
        target: FiniteSpace,
        pairs: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let assignment = source
            .points()
            .iter()
            .map(|p| {
                let y = pairs
                    .get(p)
                    .ok_or_else(|| Error::InvalidMap(format!("no image for `{p}`")))?;
                target.point_index(y)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, assignment)
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        Self {
            source: space.clone(),
            target: space.clone(),
            assignment: (0..space.len()).collect(),
        }
    }

    pub fn constant(source: &FiniteSpace, target: &FiniteSpace, point: usize) -> Result<Self> {
        Self::new(source.clone(), target.clone(), vec![point; source.len()])
    }

    pub fn source(&self) -> &FiniteSpace {
        &self.source
    }

    pub fn target(&self) -> &FiniteSpace {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, point: usize) -> usize {
        self.assignment[point]
    }

    pub fn preimage(&self, set: u64) -> u64 {
        self.assignment
            .iter()
            .enumerate()
            .filter(|&(_, &y)| bits::contains(set, y))
            .fold(0, |m, (x, _)| m | 1 << x)
    }

    pub fn image(&self, set: u64) -> u64 {
        bits::iter(set).fold(0, |m, x| m | 1 << self.assignment[x])
    }

    pub fn is_continuous(&self) -> bool {
        self.first_discontinuity().is_none()
    }

    /// A target open whose preimage is not open, if any.
    pub fn first_discontinuity(&self) -> Option<u64> {
        self.target
            .opens()
            .iter()
            .copied()
            .find(|&v| !self.source.is_open(self.preimage(v)))
    }

    pub fn check_continuous(&self) -> Result<()> {
        match self.first_discontinuity() {
            None => Ok(()),
            Some(v) => Err(Error::NotContinuous(self.target.render(v))),
        }
    }

    pub fn is_injective(&self) -> bool {
        let distinct: BTreeSet<_> = self.assignment.iter().collect();
        distinct.len() == self.assignment.len()
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.source.full()) == self.target.full()
    }

    pub fn is_open_map(&self) -> bool {
        self.source
            .opens()
            .iter()
            .all(|&u| self.target.is_open(self.image(u)))
    }

    pub fn is_homeomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective() && self.is_continuous() && self.is_open_map()
    }

    pub fn compose(&self, then: &ContinuousMap) -> Result<ContinuousMap> {
        if then.source != self.target {
            return Err(Error::Mismatch("spaces in composition"));
        }
        let assignment = self
            .assignment
            .iter()
            .map(|&y| then.assignment[y])
            .collect();
        ContinuousMap::new(self.source.clone(), then.target.clone(), assignment)
    }
}

/// A partition of the points `0..n`, blocks ordered by their lowest point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    blocks: Vec<u64>,
}

impl Partition {
    pub fn from_masks(n: usize, blocks: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut blocks: Vec<u64> = blocks.into_iter().collect();
        let mut covered = 0u64;
        for &b in &blocks {
            if b == 0 {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if b & covered != 0 {
                return Err(Error::InvalidPartition("blocks overlap".into()));
            }
            covered |= b;
        }
        if covered != bits::full(n) {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {covered:#b}, expected all of {n} points"
            )));
        }
        blocks.sort_by_key(|&b| b.trailing_zeros());
        Ok(Self { n, blocks })
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let masks = blocks
            .iter()
            .map(|b| {
                b.iter().try_fold(0u64, |m, &i| {
                    if i >= n || bits::contains(m, i) {
                        Err(Error::InvalidPartition(format!("bad index {i}")))
                    } else {
                        Ok(m | 1 << i)
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_masks(n, masks)
    }

    /// Parses `"a,b|c"` against the labels of `space`.
    pub fn parse(space: &FiniteSpace, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Self::from_masks(space.len(), []);
        }
        let masks = text
            .split('|')
            .map(|block| {
                block.split(',').try_fold(0u64, |m, label| {
                    let i = space.point_index(label.trim())?;
                    if bits::contains(m, i) {
                        return Err(Error::InvalidPartition(format!("`{label}` repeated")));
                    }
                    Ok(m | 1 << i)
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_masks(space.len(), masks)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n,
            blocks: (0..n).map(|i| 1 << i).collect(),
        }
    }

    pub fn single(n: usize) -> Self {
        Self {
            n,
            blocks: if n == 0 { vec![] } else { vec![bits::full(n)] },
        }
    }

    /// Every partition of `0..n`, via restricted growth strings.
    pub fn all(n: usize) -> Vec<Partition> {
        fn grow(i: usize, n: usize, labels: &mut Vec<usize>, max: usize, out: &mut Vec<Partition>) {
            if i == n {
                let mut blocks = vec![0u64; max];
                for (p, &l) in labels.iter().enumerate() {
                    blocks[l] |= 1 << p;
                }
                out.push(Partition { n, blocks });
                return;
            }
            for l in 0..=max {
                labels.push(l);
                grow(i + 1, n, labels, max.max(l + 1), out);
                labels.pop();
            }
        }
        let mut out = Vec::new();
        grow(0, n, &mut Vec::new(), 0, &mut out);
        out
    }

    pub fn num_points(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn block_of(&self, point: usize) -> usize {
        self.blocks
            .iter()
            .position(|&b| bits::contains(b, point))
            .expect("partition covers every point")
    }

    pub fn render(&self, space: &FiniteSpace) -> String {
        self.blocks
            .iter()
            .map(|&b| space.labels_of(b).join(","))
            .collect::<Vec<_>>()
            .join("|")
    }
}
