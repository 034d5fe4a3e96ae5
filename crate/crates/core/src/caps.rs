/// Cost caps for the exponential-time operations.
///
/// The defaults keep every call at desk scale. Raising a cap is allowed; the
/// operation then simply runs longer. Representation limits (ground sets of at
/// most 20 elements, partition enumeration over at most 14 elements) are fixed
/// and not part of this struct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Ground size for `check_binomial_type` and the power identity.
    pub binomial_ground: usize,
    /// Subset size for `expand`.
    pub expand_subset: usize,
    /// Edge count for edge-subset and orientation enumeration.
    pub edges: usize,
    /// Vertex count for stable-partition counting.
    pub stable_vertices: usize,
    /// Subset size for the rising-factorial pair-count check.
    pub pair_count_subset: usize,
    /// Subset size for the remaining chromatic verification suites.
    pub verify_subset: usize,
    /// Block count for the Abel set map table.
    pub abel_blocks: usize,
    /// Block count for the partition-sum identities of the Abel set map.
    pub abel_identity_blocks: usize,
    /// Block count for tail-forest enumeration.
    pub tail_blocks: usize,
    /// Total element count for tail-forest enumeration.
    pub tail_weight: usize,
    /// Upper bound on `x^n` leaves for brute-force coloring counts.
    pub coloring_leaves: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            binomial_ground: 7,
            expand_subset: 12,
            edges: 20,
            stable_vertices: 12,
            pair_count_subset: 6,
            verify_subset: 8,
            abel_blocks: 12,
            abel_identity_blocks: 10,
            tail_blocks: 5,
            tail_weight: 8,
            coloring_leaves: 100_000_000,
        }
    }
}
