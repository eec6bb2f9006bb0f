"""finlog: a finitistic first-order logic kernel over hereditarily finite sets."""

from .hfset import (
    EMPTY,
    HFSet,
    hf_cmp,
    hf_from_index,
    hf_index,
    hf_to_nat,
    kpair,
    make_set,
    member,
    nat_to_hf,
    parse_hf,
    print_hf,
    product,
    union,
)
from .proof import (
    ProofReport,
    ProofScript,
    SoundnessReport,
    check_proof,
    is_logical_axiom,
    models_theory,
    modus_ponens,
    parse_proof_file,
    parse_proof_text,
    soundness_check,
)
from .semantics import (
    CapacityError,
    Counterexample,
    assign_update,
    eval_formula,
    extend_truth,
    is_tautology,
    search_counterexample,
)
from .syntax import (
    Eq,
    Forall,
    Formula,
    In,
    Not,
    Or,
    ParseError,
    Var,
    conj,
    exists,
    free_vars,
    iff,
    implies,
    is_free_for,
    is_sentence,
    parse,
    parse_sugar,
    print_strict,
    substitute,
    tokenize,
    universal_closure,
)
from .zfc import NamedSentence, by_name, corpus

__version__ = "0.1.0"
