//! Abstract syntax of check documents. Source positions are carried in a
//! parallel span table so document equality is purely structural.

use crate::pro::ProWord;

#[derive(Clone, Debug, Eq)]
pub struct Document {
    pub items: Vec<Item>,
    pub spans: Vec<(usize, usize)>,
}

/// Equality of documents is structural: positions are reporting metadata,
/// not syntax.
impl PartialEq for Document {
    fn eq(&self, other: &Self) -> bool {
        self.items == other.items
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Option(OptionDecl),
    Decl(Decl),
    Check(Check),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OptionDecl {
    Bound(usize),
    Format(FormatKind),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatKind {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Category {
        name: String,
        body: CategoryBody,
    },
    Functor {
        name: String,
        body: FunctorBody,
    },
    NatTrans {
        name: String,
        body: NatTransBody,
    },
    Monad {
        name: String,
        body: MonadBody,
    },
    Comonad {
        name: String,
        body: ComonadBody,
    },
    DistLaw {
        name: String,
        monad: String,
        companion: String,
        /// explicit transformation; synthesized when absent
        law: Option<String>,
    },
    Lift {
        name: String,
        companion: String,
        monad: String,
        /// algebra index assignment
        objects: Vec<usize>,
    },
    MonadMap {
        name: String,
        k: String,
        alpha: String,
        t: String,
        s: String,
    },
    Pro {
        name: String,
        body: ProBody,
    },
    Representation {
        name: String,
        pro: String,
        body: RepBody,
    },
    PairMap {
        name: String,
        k: String,
        zeta: String,
        alpha: String,
        t_rep: String,
        t_law: String,
        s_rep: String,
        s_law: String,
    },
    Transformation {
        name: String,
        from: String,
        to: String,
        sigma: String,
    },
}

impl Decl {
    pub fn name(&self) -> &str {
        match self {
            Decl::Category { name, .. }
            | Decl::Functor { name, .. }
            | Decl::NatTrans { name, .. }
            | Decl::Monad { name, .. }
            | Decl::Comonad { name, .. }
            | Decl::DistLaw { name, .. }
            | Decl::Lift { name, .. }
            | Decl::MonadMap { name, .. }
            | Decl::Pro { name, .. }
            | Decl::Representation { name, .. }
            | Decl::PairMap { name, .. }
            | Decl::Transformation { name, .. } => name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CategoryBody {
    PosetChain(usize),
    PosetTable(Vec<Vec<u8>>),
    MonoidZ2,
    MonoidTable(Vec<Vec<usize>>),
    Explicit {
        objects: usize,
        morphisms: Vec<(usize, usize)>,
        identity: Vec<usize>,
        /// -1 encodes an undefined entry
        compose: Vec<Vec<i64>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctorBody {
    Tables {
        source: String,
        target: String,
        objects: Vec<usize>,
        morphisms: Option<Vec<usize>>,
    },
    Identity(String),
    Compose(String, String),
    Power(String, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NatTransBody {
    Components {
        source: String,
        target: String,
        components: Vec<usize>,
    },
    Auto {
        source: String,
        target: String,
    },
    Id(String),
    VCompose(String, String),
    HCompose(String, String),
    WhiskerLeft(String, String),
    WhiskerRight(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonadBody {
    Closure { cat: String, image: Vec<usize> },
    IdentityOn { cat: String },
    Parts { functor: String, mu: String, eta: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComonadBody {
    Interior { cat: String, image: Vec<usize> },
    Parts { functor: String, delta: String, epsilon: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProBody {
    Monoid,
    Counital,
    Custom {
        generators: Vec<(String, usize, usize)>,
        relations: Vec<(ProWord, ProWord)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepBody {
    FromMonad(String),
    FromComonad(String),
    Explicit {
        functor: String,
        images: Vec<(String, String)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    ValidateCategory(String),
    Compose { cat: String, g: usize, f: usize, expect: usize },
    ValidateFunctor(String),
    ValidateNatTrans(String),
    NatTransEqual { a: String, b: String, expect: bool },
    Interchange(String),
    PowerAdditivity { functor: String, bound: usize },
    CountFunctors { cat: String, expect: u64 },
    CountNatTrans { f: String, g: String, expect: u64 },
    CountMonads { cat: String, expect: u64 },
    CountLaws { monad: String, companion: String, expect: u64 },
    ValidateMonad(String),
    ValidateComonad(String),
    EmCount { monad: String, expect: u64 },
    ValidateMonadMap { alpha: String, from: String, to: String },
    MonadMapRoundtrip { from: String, to: String },
    ValidateMonadMapAcross(String),
    ComposeMonadMaps { outer: String, inner: String },
    AcrossRoundtrip(String),
    ValidateMapTransformation(String),
    TransformationRoundtrip(String),
    EpsIdentity { from: String, to: String },
    ValidateDistLaw(String),
    LiftFromLaw(String),
    LawFromLift(String),
    BeckRoundtrip { monad: String, companion: String },
    ValidateDistrMorphism { alpha: String, from: String, to: String },
    HalphaEquivariance { alpha: String, from: String, to: String },
    MixedPentagonH { law: String, law2: String },
    MixedPentagonAlpha { alpha: String, from: String, to: String },
    VerticalAgreement { alpha: String, from: String, to: String },
    Contravariant(String),
    WordArity { pro: String, word: ProWord, dom: usize, cod: usize },
    EvalWord { rep: String, lhs: ProWord, rhs: ProWord },
    ValidateRepresentation(String),
    Decomposition { law: String, bound: usize },
    LnConsistency { law: String, bound: usize },
    Multigon { rep: String, gen: String, law: String, edges: u64 },
    EquivariantRep { rep: String, law: String },
    ValidatePairMap(String),
    PowerLemma { outer: String, inner: String, bound: usize },
    ComposePairMaps { outer: String, inner: String },
    MixedHeptagon { pairmap: String, gen: String },
    ValidatePairTransformation(String),
    Cube(String),
    YangBaxter { law: String, comonad: String },
    BraidedTower { law: String, comonad: String, bound: usize },
    BuiltinPros,
}

impl Check {
    /// The operation name used in reports.
    pub fn op(&self) -> &'static str {
        match self {
            Check::ValidateCategory(_) => "validate_category",
            Check::Compose { .. } => "compose",
            Check::ValidateFunctor(_) => "validate_functor",
            Check::ValidateNatTrans(_) => "validate_nat_trans",
            Check::NatTransEqual { .. } => "nat_trans_equal",
            Check::Interchange(_) => "interchange",
            Check::PowerAdditivity { .. } => "power_additivity",
            Check::CountFunctors { .. } => "count_functors",
            Check::CountNatTrans { .. } => "count_nat_trans",
            Check::CountMonads { .. } => "count_monads",
            Check::CountLaws { .. } => "count_laws",
            Check::ValidateMonad(_) => "validate_monad",
            Check::ValidateComonad(_) => "validate_comonad",
            Check::EmCount { .. } => "em_count",
            Check::ValidateMonadMap { .. } => "validate_monad_map",
            Check::MonadMapRoundtrip { .. } => "monad_map_roundtrip",
            Check::ValidateMonadMapAcross(_) => "validate_monad_map_across",
            Check::ComposeMonadMaps { .. } => "compose_monad_maps",
            Check::AcrossRoundtrip(_) => "across_roundtrip",
            Check::ValidateMapTransformation(_) => "validate_map_transformation",
            Check::TransformationRoundtrip(_) => "transformation_roundtrip",
            Check::EpsIdentity { .. } => "eps_identity",
            Check::ValidateDistLaw(_) => "validate_dist_law",
            Check::LiftFromLaw(_) => "lift_from_law",
            Check::LawFromLift(_) => "law_from_lift",
            Check::BeckRoundtrip { .. } => "beck_roundtrip",
            Check::ValidateDistrMorphism { .. } => "validate_distr_morphism",
            Check::HalphaEquivariance { .. } => "halpha_equivariance",
            Check::MixedPentagonH { .. } => "mixed_pentagon_h",
            Check::MixedPentagonAlpha { .. } => "mixed_pentagon_alpha",
            Check::VerticalAgreement { .. } => "vertical_agreement",
            Check::Contravariant(_) => "contravariant",
            Check::WordArity { .. } => "word_arity",
            Check::EvalWord { .. } => "eval_word",
            Check::ValidateRepresentation(_) => "validate_representation",
            Check::Decomposition { .. } => "decomposition",
            Check::LnConsistency { .. } => "ln_consistency",
            Check::Multigon { .. } => "multigon",
            Check::EquivariantRep { .. } => "equivariant_rep",
            Check::ValidatePairMap(_) => "validate_pair_map",
            Check::PowerLemma { .. } => "power_lemma",
            Check::ComposePairMaps { .. } => "compose_pair_maps",
            Check::MixedHeptagon { .. } => "mixed_heptagon",
            Check::ValidatePairTransformation(_) => "validate_pair_transformation",
            Check::Cube(_) => "cube",
            Check::YangBaxter { .. } => "yang_baxter",
            Check::BraidedTower { .. } => "braided_tower",
            Check::BuiltinPros => "builtin_pros",
        }
    }
}
