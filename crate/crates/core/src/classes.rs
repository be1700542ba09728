//! Element classes: Boolean center, idempotents, regulars, nilpotents and
//! archimedean elements.

use crate::algebra::ResiduatedLattice;
use crate::elemset::ElemSet;
use crate::lattice::Elem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementClassReport {
    pub boolean_center: ElemSet,
    pub idempotents: ElemSet,
    pub regulars: ElemSet,
    pub nilpotents: ElemSet,
    pub archimedeans: ElemSet,
    pub is_godel: bool,
    pub is_involutive: bool,
    pub is_chain: bool,
    pub is_distributive: bool,
    pub is_hyperarchimedean: bool,
}

impl ResiduatedLattice {
    /// `a | !a = 1` and `a & !a = 0`.
    pub fn is_boolean(&self, a: Elem) -> bool {
        let na = self.neg(a);
        self.join(a, na) == self.top() && self.meet(a, na) == self.bot()
    }

    pub fn boolean_center(&self) -> ElemSet {
        self.elements().filter(|&a| self.is_boolean(a)).collect()
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.odot(a, a) == a
    }

    pub fn idempotents(&self) -> ElemSet {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    pub fn is_regular(&self, a: Elem) -> bool {
        self.neg(self.neg(a)) == a
    }

    pub fn regulars(&self) -> ElemSet {
        self.elements().filter(|&a| self.is_regular(a)).collect()
    }

    /// `a^n = 0` for some `n <= size`.
    pub fn is_nilpotent(&self, a: Elem) -> bool {
        self.stable_power(a) == self.bot()
    }

    pub fn nilpotents(&self) -> ElemSet {
        self.elements().filter(|&a| self.is_nilpotent(a)).collect()
    }

    /// `a^n` Boolean for some `n <= size`.
    pub fn is_archimedean(&self, a: Elem) -> bool {
        self.powers(a).into_iter().any(|p| self.is_boolean(p))
    }

    pub fn archimedeans(&self) -> ElemSet {
        self.elements().filter(|&a| self.is_archimedean(a)).collect()
    }

    pub fn is_hyperarchimedean(&self) -> bool {
        self.archimedeans() == self.carrier()
    }

    pub fn classify(&self) -> ElementClassReport {
        let boolean_center = self.boolean_center();
        let idempotents = self.idempotents();
        let regulars = self.regulars();
        let archimedeans = self.archimedeans();
        let all = self.carrier();
        ElementClassReport {
            boolean_center,
            idempotents,
            regulars,
            nilpotents: self.nilpotents(),
            archimedeans,
            is_godel: idempotents == all,
            is_involutive: regulars == all,
            is_chain: self.is_chain(),
            is_distributive: self.is_distributive(),
            is_hyperarchimedean: archimedeans == all,
        }
    }
}
