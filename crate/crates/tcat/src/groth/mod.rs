//! Integration constructions: the 1-categorical Grothendieck construction,
//! categories of elements, Fubini, the 2-categorical integrations with their
//! duals, comparison functors, and the comma spans built from them.

mod one;
mod span;
mod two;

pub use one::{cat_of_elements, fubini_check, int_cat, int_nat, CatDiagram, CatNat, FubiniWitness};
pub use span::{s_functorial, s_span, s1, s2, SSpan, SpanOfFunctor};
pub use two::{int2, k_retraction, IntVariant, Integration, TwoDiagram};
