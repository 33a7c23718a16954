//! δ Lie-super triple systems: axioms, invariant forms, multiplication
//! operators and trace forms.

mod axioms;
mod examples;
mod ideals;
mod system;

pub use axioms::{
    check_form_conditions, check_lemma_2_1, check_triple_axioms, equivalences, trace_form, EquivalenceReport,
    FormConditionReport, OperatorIdentityReport, TraceFormReport, TripleAxiomReport,
};
pub(crate) use axioms::Pairings;
pub(crate) use examples::check_symmetric_form;
pub use examples::{check_p_operator, example_2_1, example_2_2, p_homomorphism_holds, triple_from_lie};
pub use ideals::{triple_span, verify_triple_decomposition, verify_triple_ideal, TripleDecompositionReport};
pub use system::{MultOperator, OperatorKind, TripleEntry, TripleSystem};
