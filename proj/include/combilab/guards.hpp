#pragma once

namespace combilab {

/// Size limits for the brute-force enumerators.
struct EnumGuards {
    int inset_ground = 26;       // 2n + m
    int minpart_total = 30;
    int marked_total = 20;
    int marked_k = 6;
    int exact_large_total = 20;
    // Cap on the number of objects a single enumeration may return.
    long long max_results = 1'000'000;

    /// Defaults, with every size bound replaced by COMBILAB_MAX_ENUM when that
    /// variable holds an integer. The marked-k cap is not affected.
    static EnumGuards from_env();
    EnumGuards with_size_limit(int limit) const;
};

}  // namespace combilab
