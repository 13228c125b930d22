//! Fixed data: A6 inside S6, the double-transposition class, the Valentiner
//! triple cover inside S18 with its covering map, and the lookup tables every
//! hot loop runs on.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::perm::{close, GroupTable, Parity, Perm};

/// Generators of A6 inside S6.
pub const A6_GENERATORS: [&str; 2] = ["(1,2)(3,4)", "(1,2,4,5)(3,6)"];

/// Generators of the Valentiner group inside S18, mapped in order onto
/// [`A6_GENERATORS`].
pub const VALENTINER_GENERATORS: [&str; 2] = [
    "(2,6)(4,11)(7,9)(8,13)(10,14)(12,16)",
    "(1,2,7,4)(3,8,6,10)(5,9,13,12)(11,15)(14,17)(16,18)",
];

/// The pinned generator σ of the central kernel.
pub const KERNEL_GENERATOR: &str = "(1,3,5)(2,8,9)(4,10,12)(6,13,7)(11,14,16)(15,17,18)";

/// The 45 double transpositions of A6 in their reference order.
pub const CLASS_LIST: [&str; 45] = [
    "(1,2)(3,4)",
    "(1,2)(3,5)",
    "(1,2)(3,6)",
    "(1,2)(4,5)",
    "(1,2)(4,6)",
    "(1,2)(5,6)",
    "(1,3)(2,4)",
    "(1,3)(2,5)",
    "(1,3)(2,6)",
    "(1,3)(4,5)",
    "(1,3)(4,6)",
    "(1,3)(5,6)",
    "(1,4)(2,3)",
    "(1,4)(2,5)",
    "(1,4)(2,6)",
    "(1,4)(3,5)",
    "(1,4)(3,6)",
    "(1,4)(5,6)",
    "(1,5)(2,3)",
    "(1,5)(2,4)",
    "(1,5)(2,6)",
    "(1,5)(3,4)",
    "(1,5)(3,6)",
    "(1,5)(4,6)",
    "(1,6)(2,3)",
    "(1,6)(2,4)",
    "(1,6)(2,5)",
    "(1,6)(3,4)",
    "(1,6)(3,5)",
    "(1,6)(4,5)",
    "(2,3)(4,5)",
    "(2,3)(4,6)",
    "(2,3)(5,6)",
    "(2,4)(3,5)",
    "(2,4)(3,6)",
    "(2,4)(5,6)",
    "(2,5)(3,4)",
    "(2,5)(3,6)",
    "(2,5)(4,6)",
    "(2,6)(3,4)",
    "(2,6)(3,5)",
    "(2,6)(4,5)",
    "(3,4)(5,6)",
    "(3,5)(4,6)",
    "(3,6)(4,5)",
];

pub const CLASS_SIZE: usize = 45;

/// Position of an element in [`CLASS_LIST`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ClassElem(pub u8);

impl ClassElem {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn perm(self) -> Perm {
        context().class[self.index()]
    }

    pub fn from_perm(p: &Perm) -> Result<ClassElem> {
        context()
            .class_index
            .get(p)
            .map(|&i| ClassElem(i))
            .ok_or_else(|| Error::NotInClass(p.to_string()))
    }

    pub fn all() -> impl Iterator<Item = ClassElem> {
        (0..CLASS_SIZE as u8).map(ClassElem)
    }
}

impl fmt::Display for ClassElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.perm(), f)
    }
}

/// The ordered conjugacy class of double transpositions.
#[derive(Clone, Debug)]
pub struct ClassList {
    elements: Vec<Perm>,
}

impl ClassList {
    pub fn standard() -> ClassList {
        ClassList {
            elements: context().class.clone(),
        }
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// The covering `V → A6` with kernel `{1, σ, σ²}`.
#[derive(Clone, Debug)]
pub struct Covering {
    valentiner: GroupTable,
    a6: GroupTable,
    /// Image in A6 of each Valentiner element, by Valentiner index.
    image: Vec<u16>,
    /// The three preimages of each A6 element, by A6 index.
    preimages: Vec<[u16; 3]>,
    /// Index of the order-2 lift of each class element.
    class_lift: [u16; CLASS_SIZE],
    /// `kernel[e]` is the Valentiner index of σ^e.
    kernel: [u16; 3],
    /// σ exponent by Valentiner index, `u8::MAX` outside the kernel.
    kernel_exponent: Vec<u8>,
    mul: Vec<u16>,
}

impl Covering {
    /// Enumerates V by BFS on words in its two generators, evaluating the same
    /// words on the A6 generators, then checks every structural invariant.
    pub fn build() -> Result<Covering> {
        let v_gens = [
            Perm::parse(VALENTINER_GENERATORS[0], 18)?,
            Perm::parse(VALENTINER_GENERATORS[1], 18)?,
        ];
        let s_gens = [Perm::parse(A6_GENERATORS[0], 6)?, Perm::parse(A6_GENERATORS[1], 6)?];
        let a6 = close(&s_gens)?;

        let mut image_of: FxHashMap<Perm, Perm> = FxHashMap::default();
        let id18 = Perm::identity(18)?;
        image_of.insert(id18, Perm::identity(6)?);
        let mut queue = VecDeque::from([id18]);
        while let Some(v) = queue.pop_front() {
            let s = image_of[&v];
            for (vg, sg) in v_gens.iter().zip(&s_gens) {
                let w = v.then(vg);
                let t = s.then(sg);
                match image_of.get(&w) {
                    Some(existing) if *existing != t => {
                        return Err(Error::Construction(format!(
                            "two words for {w} map to {existing} and {t}"
                        )));
                    }
                    Some(_) => {}
                    None => {
                        image_of.insert(w, t);
                        queue.push_back(w);
                    }
                }
            }
        }
        let valentiner = GroupTable::from_closed(18, v_gens.to_vec(), image_of.keys().copied().collect());
        if valentiner.order() != 1080 {
            return Err(Error::Construction(format!(
                "Valentiner group has order {}",
                valentiner.order()
            )));
        }

        let image: Vec<u16> = valentiner
            .elements()
            .iter()
            .map(|v| a6.index_of(&image_of[v]).map(|i| i as u16))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Construction("image outside A6".into()))?;

        let mut buckets: Vec<Vec<u16>> = vec![Vec::new(); a6.order()];
        for (vi, &ai) in image.iter().enumerate() {
            buckets[ai as usize].push(vi as u16);
        }
        let preimages: Vec<[u16; 3]> = buckets
            .iter()
            .map(|b| <[u16; 3]>::try_from(b.as_slice()))
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Construction("an A6 element does not have 3 preimages".into()))?;

        let sigma = Perm::parse(KERNEL_GENERATOR, 18)?;
        let sigma_idx = valentiner
            .index_of(&sigma)
            .ok_or_else(|| Error::Construction("σ is not in V".into()))?;
        if image[sigma_idx] as usize != a6.identity_index() || sigma.order() != 3 {
            return Err(Error::Construction("σ is not an order-3 kernel element".into()));
        }
        if let Some(v) = valentiner.elements().iter().find(|v| v.then(&sigma) != sigma.then(v)) {
            return Err(Error::Construction(format!("σ does not commute with {v}")));
        }
        let kernel = [
            valentiner.identity_index() as u16,
            sigma_idx as u16,
            valentiner.index_of(&sigma.then(&sigma)).expect("closed") as u16,
        ];
        let mut kernel_exponent = vec![u8::MAX; valentiner.order()];
        for (e, &k) in kernel.iter().enumerate() {
            kernel_exponent[k as usize] = e as u8;
        }
        let kernel_set: Vec<u16> = {
            let mut k = preimages[a6.identity_index()].to_vec();
            k.sort_unstable();
            k
        };
        let mut expected = kernel.to_vec();
        expected.sort_unstable();
        if kernel_set != expected {
            return Err(Error::Construction("kernel is not generated by σ".into()));
        }

        for (vg, sg) in v_gens.iter().zip(&s_gens) {
            if image_of[vg] != *sg {
                return Err(Error::Construction(format!("{vg} does not map to {sg}")));
            }
        }

        let mut class_lift = [0u16; CLASS_SIZE];
        for (ci, text) in CLASS_LIST.iter().enumerate() {
            let x = Perm::parse(text, 6)?;
            let ai = a6
                .index_of(&x)
                .ok_or_else(|| Error::Construction(format!("{x} not in A6")))?;
            let orders: Vec<u64> = preimages[ai]
                .iter()
                .map(|&vi| valentiner.elements()[vi as usize].order())
                .collect();
            let order2: Vec<u16> = preimages[ai]
                .iter()
                .copied()
                .filter(|&vi| valentiner.elements()[vi as usize].order() == 2)
                .collect();
            let order6 = orders.iter().filter(|&&o| o == 6).count();
            if order2.len() != 1 || order6 != 2 {
                return Err(Error::Construction(format!("{x} has preimage orders {orders:?}")));
            }
            class_lift[ci] = order2[0];
        }

        let mul = valentiner.multiplication_table();
        Ok(Covering {
            valentiner,
            a6,
            image,
            preimages,
            class_lift,
            kernel,
            kernel_exponent,
            mul,
        })
    }

    pub fn valentiner(&self) -> &GroupTable {
        &self.valentiner
    }

    pub fn a6(&self) -> &GroupTable {
        &self.a6
    }

    pub fn kernel_generator(&self) -> Perm {
        self.valentiner.elements()[self.kernel[1] as usize]
    }

    /// σ^e for `e ∈ {0, 1, 2}`.
    pub fn kernel_element(&self, exponent: u8) -> Perm {
        self.valentiner.elements()[self.kernel[exponent as usize % 3] as usize]
    }

    pub fn image_of(&self, v: &Perm) -> Option<Perm> {
        let vi = self.valentiner.index_of(v)?;
        Some(self.a6.elements()[self.image[vi] as usize])
    }

    pub fn preimages(&self, x: &Perm) -> Option<[Perm; 3]> {
        let ai = self.a6.index_of(x)?;
        Some(self.preimages[ai].map(|vi| self.valentiner.elements()[vi as usize]))
    }

    /// The unique order-2 preimage of a class element.
    pub fn order2_lift(&self, x: &Perm) -> Result<Perm> {
        let c = ClassElem::from_perm(x)?;
        Ok(self.valentiner.elements()[self.class_lift[c.index()] as usize])
    }

    pub fn kernel_exponent(&self, k: &Perm) -> Result<u8> {
        self.valentiner
            .index_of(k)
            .map(|i| self.kernel_exponent[i])
            .filter(|&e| e != u8::MAX)
            .ok_or_else(|| Error::NotInKernel(k.to_string()))
    }

    /// Valentiner index of the order-2 lift of a class element.
    #[inline]
    pub(crate) fn lift_index(&self, c: ClassElem) -> u16 {
        self.class_lift[c.index()]
    }

    #[inline]
    pub(crate) fn mul_index(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.valentiner.order() + b as usize]
    }

    #[inline]
    pub(crate) fn exponent_of_index(&self, v: u16) -> Option<u8> {
        let e = self.kernel_exponent[v as usize];
        (e != u8::MAX).then_some(e)
    }

    pub(crate) fn identity_index(&self) -> u16 {
        self.kernel[0]
    }
}

pub fn build_covering() -> Result<Covering> {
    Covering::build()
}

/// Subgroups of A6 reachable from the trivial group by joining class
/// elements one at a time, with the join table that tracks the generated
/// subgroup of a growing tuple in O(1) per entry.
#[derive(Clone, Debug)]
pub struct ClassSubgroups {
    join: Vec<u16>,
    order: Vec<u16>,
    transitive: Vec<bool>,
    members: Vec<[u64; 6]>,
    a6_id: u16,
}

/// Identifier of a subgroup in [`ClassSubgroups`]. `SubgroupId(0)` is trivial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct SubgroupId(pub u16);

impl ClassSubgroups {
    pub const TRIVIAL: SubgroupId = SubgroupId(0);

    fn build(a6: &GroupTable, a6_mul: &[u16], class_a6: &[u16; CLASS_SIZE]) -> ClassSubgroups {
        let n = a6.order();
        let id = a6.identity_index();
        let mut index: FxHashMap<[u64; 6], u16> = FxHashMap::default();
        let mut members: Vec<[u64; 6]> = Vec::new();
        let mut gens: Vec<Vec<u16>> = Vec::new();
        let bit = |s: &[u64; 6], i: usize| s[i / 64] >> (i % 64) & 1 == 1;

        let mut trivial = [0u64; 6];
        trivial[id / 64] |= 1 << (id % 64);
        index.insert(trivial, 0);
        members.push(trivial);
        gens.push(vec![]);

        let mut join: Vec<u16> = Vec::new();
        let mut cursor = 0;
        while cursor < members.len() {
            let base = members[cursor];
            let base_gens = gens[cursor].clone();
            for (ci, &x) in class_a6.iter().enumerate() {
                if bit(&base, x as usize) {
                    join.push(cursor as u16);
                    continue;
                }
                let mut set = base;
                let mut list: Vec<u16> = (0..n).filter(|&i| bit(&base, i)).map(|i| i as u16).collect();
                let all_gens: Vec<u16> = base_gens.iter().copied().chain([x]).collect();
                let mut i = 0;
                while i < list.len() {
                    let e = list[i] as usize;
                    i += 1;
                    for &g in &all_gens {
                        let y = a6_mul[e * n + g as usize] as usize;
                        if !bit(&set, y) {
                            set[y / 64] |= 1 << (y % 64);
                            list.push(y as u16);
                        }
                    }
                }
                let sid = *index.entry(set).or_insert_with(|| {
                    members.push(set);
                    let mut g = base_gens.clone();
                    g.push(x);
                    gens.push(g);
                    (members.len() - 1) as u16
                });
                debug_assert!(ci < CLASS_SIZE);
                join.push(sid);
            }
            cursor += 1;
        }

        let elements = a6.elements();
        let order: Vec<u16> = members
            .iter()
            .map(|s| s.iter().map(|w| w.count_ones() as u16).sum())
            .collect();
        let transitive: Vec<bool> = members
            .iter()
            .map(|s| {
                let mut reach = 0u32;
                for i in (0..n).filter(|&i| bit(s, i)) {
                    reach |= 1 << elements[i].apply(0);
                }
                reach == 0b11_1111
            })
            .collect();
        let a6_id = order
            .iter()
            .position(|&o| o as usize == n)
            .expect("A6 is class-generated") as u16;
        ClassSubgroups {
            join,
            order,
            transitive,
            members,
            a6_id,
        }
    }

    #[inline]
    pub fn join(&self, h: SubgroupId, c: ClassElem) -> SubgroupId {
        SubgroupId(self.join[h.0 as usize * CLASS_SIZE + c.index()])
    }

    pub fn generated(&self, entries: &[ClassElem]) -> SubgroupId {
        entries.iter().fold(Self::TRIVIAL, |h, &c| self.join(h, c))
    }

    pub fn order(&self, h: SubgroupId) -> usize {
        self.order[h.0 as usize] as usize
    }

    pub fn is_transitive(&self, h: SubgroupId) -> bool {
        self.transitive[h.0 as usize]
    }

    pub fn a6(&self) -> SubgroupId {
        SubgroupId(self.a6_id)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Element set of a subgroup as a table.
    pub fn table(&self, h: SubgroupId) -> GroupTable {
        let a6 = context().a6();
        let m = &self.members[h.0 as usize];
        let elements: Vec<Perm> = (0..a6.order())
            .filter(|&i| m[i / 64] >> (i % 64) & 1 == 1)
            .map(|i| a6.elements()[i])
            .collect();
        GroupTable::from_closed(6, vec![], elements)
    }

    /// Id of a subgroup given by its table, if it is class-generated.
    pub fn find(&self, g: &GroupTable) -> Option<SubgroupId> {
        let a6 = context().a6();
        let mut set = [0u64; 6];
        for p in g.elements() {
            let i = a6.index_of(p)?;
            set[i / 64] |= 1 << (i % 64);
        }
        self.members
            .iter()
            .position(|m| *m == set)
            .map(|i| SubgroupId(i as u16))
    }
}

/// Everything derived once from the fixed data.
pub struct Context {
    s6: GroupTable,
    s6_even: Vec<bool>,
    a6: GroupTable,
    class: Vec<Perm>,
    class_index: FxHashMap<Perm, u8>,
    /// `conj[s * 45 + x]` is the class index of `s⁻¹ x s`, `s` an S6 index.
    conj: Vec<u8>,
    /// `braid[a * 45 + b]` is the class index of `a b a` (= `a⁻¹ b a`).
    braid: [[u8; CLASS_SIZE]; CLASS_SIZE],
    /// Even conjugators sending a class element to class index 0.
    to_front_even: Vec<Vec<u16>>,
    /// All S6 conjugators sending a class element to class index 0.
    to_front_all: Vec<Vec<u16>>,
    /// `a6_mul_class[p * 45 + c]`: A6 index of `a6[p] · class[c]`.
    a6_mul_class: Vec<u16>,
    a6_inverse: Vec<u16>,
    /// Class index of an A6 element, `u8::MAX` when outside the class.
    a6_class: Vec<u8>,
    subgroups: ClassSubgroups,
    covering: Covering,
}

static CONTEXT: OnceLock<Context> = OnceLock::new();

/// The shared fixed-data context, built on first use.
pub fn context() -> &'static Context {
    CONTEXT.get_or_init(|| Context::build().expect("fixed data must be consistent"))
}

impl Context {
    fn build() -> Result<Context> {
        let covering = Covering::build()?;
        let a6 = covering.a6().clone();
        let s6 = close(&[Perm::parse("(1,2)", 6)?, Perm::parse("(1,2,3,4,5,6)", 6)?])?;
        let s6_even: Vec<bool> = s6.elements().iter().map(|p| p.parity() == Parity::Even).collect();

        let class: Vec<Perm> = CLASS_LIST.iter().map(|t| Perm::parse(t, 6)).collect::<Result<_>>()?;
        let class_index: FxHashMap<Perm, u8> = class.iter().enumerate().map(|(i, p)| (*p, i as u8)).collect();
        if class_index.len() != CLASS_SIZE {
            return Err(Error::Construction("class list has duplicates".into()));
        }
        let mut class_a6 = [0u16; CLASS_SIZE];
        for (i, p) in class.iter().enumerate() {
            class_a6[i] = a6
                .index_of(p)
                .ok_or_else(|| Error::Construction(format!("{p} not in A6")))? as u16;
        }

        let mut conj = vec![0u8; s6.order() * CLASS_SIZE];
        let mut to_front_even = vec![Vec::new(); CLASS_SIZE];
        let mut to_front_all = vec![Vec::new(); CLASS_SIZE];
        for (si, s) in s6.elements().iter().enumerate() {
            for (xi, x) in class.iter().enumerate() {
                let y = x.conjugate_by(s);
                let yi = *class_index
                    .get(&y)
                    .ok_or_else(|| Error::Construction(format!("class not closed under {s}")))?;
                conj[si * CLASS_SIZE + xi] = yi;
                if yi == 0 {
                    to_front_all[xi].push(si as u16);
                    if s6_even[si] {
                        to_front_even[xi].push(si as u16);
                    }
                }
            }
        }

        let mut braid = [[0u8; CLASS_SIZE]; CLASS_SIZE];
        for (ai, a) in class.iter().enumerate() {
            for (bi, b) in class.iter().enumerate() {
                braid[ai][bi] = class_index[&b.conjugate_by(a)];
            }
        }

        let a6_table = a6.multiplication_table();
        let n = a6.order();
        let mut a6_mul_class = vec![0u16; n * CLASS_SIZE];
        for p in 0..n {
            for (c, &ca) in class_a6.iter().enumerate() {
                a6_mul_class[p * CLASS_SIZE + c] = a6_table[p * n + ca as usize];
            }
        }
        let a6_inverse: Vec<u16> = a6
            .elements()
            .iter()
            .map(|p| a6.index_of(&p.inverse()).expect("closed") as u16)
            .collect();
        let mut a6_class = vec![u8::MAX; n];
        for (c, &ca) in class_a6.iter().enumerate() {
            a6_class[ca as usize] = c as u8;
        }

        let subgroups = ClassSubgroups::build(&a6, &a6_table, &class_a6);

        Ok(Context {
            s6,
            s6_even,
            a6,
            class,
            class_index,
            conj,
            braid,
            to_front_even,
            to_front_all,
            a6_mul_class,
            a6_inverse,
            a6_class,
            subgroups,
            covering,
        })
    }

    pub fn s6(&self) -> &GroupTable {
        &self.s6
    }

    pub fn a6(&self) -> &GroupTable {
        &self.a6
    }

    pub fn class(&self) -> &[Perm] {
        &self.class
    }

    pub fn covering(&self) -> &Covering {
        &self.covering
    }

    pub fn subgroups(&self) -> &ClassSubgroups {
        &self.subgroups
    }

    pub fn s6_index(&self, s: &Perm) -> Option<usize> {
        self.s6.index_of(s)
    }

    pub fn is_even_index(&self, s: usize) -> bool {
        self.s6_even[s]
    }

    #[inline]
    pub(crate) fn conj(&self, s: usize, x: ClassElem) -> ClassElem {
        ClassElem(self.conj[s * CLASS_SIZE + x.index()])
    }

    /// `a⁻¹ b a` for class elements.
    #[inline]
    pub(crate) fn braid_conj(&self, a: ClassElem, b: ClassElem) -> ClassElem {
        ClassElem(self.braid[a.index()][b.index()])
    }

    #[inline]
    pub(crate) fn to_front(&self, x: ClassElem, even_only: bool) -> &[u16] {
        if even_only {
            &self.to_front_even[x.index()]
        } else {
            &self.to_front_all[x.index()]
        }
    }

    #[inline]
    pub(crate) fn a6_mul_class(&self, p: u16, c: ClassElem) -> u16 {
        self.a6_mul_class[p as usize * CLASS_SIZE + c.index()]
    }

    #[inline]
    pub(crate) fn a6_inverse(&self, p: u16) -> u16 {
        self.a6_inverse[p as usize]
    }

    #[inline]
    pub(crate) fn a6_as_class(&self, p: u16) -> Option<ClassElem> {
        let c = self.a6_class[p as usize];
        (c != u8::MAX).then_some(ClassElem(c))
    }

    #[inline]
    pub(crate) fn a6_identity(&self) -> u16 {
        self.a6.identity_index() as u16
    }
}

/// Unique order-2 preimage of a class element under the covering.
pub fn order2_lift(x: &Perm) -> Result<Perm> {
    context().covering().order2_lift(x)
}

/// The exponent `e` with `k = σ^e`.
pub fn kernel_exponent(k: &Perm) -> Result<u8> {
    context().covering().kernel_exponent(k)
}
