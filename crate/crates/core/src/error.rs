use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("modulus must be at least 3, got {0}")]
    ModulusTooSmall(u64),

    #[error("residue {value} is out of range for modulus {modulus}")]
    ResidueOutOfRange { value: u64, modulus: u64 },

    #[error("jump {value} is congruent to 0 mod {modulus} (self-loop)")]
    DegenerateJump { value: i64, modulus: u64 },

    #[error("jump {jump} is outside [1, {max}] for modulus {modulus}")]
    JumpOutOfRange { jump: u64, max: u64, modulus: u64 },

    #[error("connection set is empty")]
    EmptyConnectionSet,

    #[error("multiplier {a} is not a unit mod {modulus}")]
    NotAUnit { a: u64, modulus: u64 },

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("{jump} is not a jump of C_{modulus}({jumps})")]
    NotAJump {
        jump: u64,
        modulus: u64,
        jumps: String,
    },

    #[error("gcd({modulus}, {r}) = 1; the transformation needs gcd > 1")]
    CoprimeJump { r: u64, modulus: u64 },

    #[error("Type-2 testing needs at least 3 jumps, got {0}")]
    TooFewJumps(usize),

    #[error("cannot compose maps with different (n, r): ({n1}, {r1}) vs ({n2}, {r2})")]
    ComposeMismatch { n1: u64, r1: u64, n2: u64, r2: u64 },

    #[error("equidistance at v_0 ({equidistant}) disagrees with full circulancy ({circulant})")]
    CirculancyDisagreement { equidistant: bool, circulant: bool },

    #[error("not a permutation of Z_{0}")]
    NotAPermutation(u64),

    #[error("invalid family parameters: {0}")]
    InvalidParams(String),

    #[error("degenerate family set: {0}")]
    JumpCollision(String),

    #[error("Type-2 group check failed: {0}")]
    GroupLaw(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
