use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group closure exceeded the element cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("poset exceeded the size cap of {cap}")]
    PosetCapExceeded { cap: usize },
    #[error("complex exceeded the simplex cap of {cap}")]
    MatrixTooLarge { cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("subgroup set is not invariant under conjugation")]
    NotInvariant,
    #[error("unsupported group spec: {0}")]
    UnsupportedSpec(String),
    #[error("cannot parse group spec at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("action on {degree} points exceeds the degree limit")]
    ActionTooLarge { degree: usize },
    #[error("extension requires a matrix group")]
    NotAMatrixGroup,
    #[error("graph extension requires PSL(n,q) with n >= 3 acting on points and hyperplanes")]
    ActionNotDoubled,
    #[error("unknown named subgroup {0}")]
    UnknownName(String),
    #[error("computed Lie rank {computed} disagrees with tagged rank {tagged}")]
    TagMismatch { computed: usize, tagged: usize },
    #[error("more than one tagged candidate for SCNL_{p}")]
    MultipleCandidates { p: u64 },
    #[error("no tagged SCNL_{p} candidate")]
    NoTaggedCandidate { p: u64 },
    #[error("member of rank {rank} in F_G(H) cannot be bucketed")]
    RankTwoOuter { rank: usize },
    #[error("G_df annotation missing")]
    GdfMissing,
    #[error("torsion coefficient does not fit in 64 bits")]
    TorsionOverflow,
}

pub type Result<T> = std::result::Result<T, Error>;
