#pragma once

#include <string>
#include <vector>

#include "sclift/counting.hpp"

namespace sclift {

/// Sliding-window geometry over a terminated AB-SC matrix.
///
/// A window anchored at position T covers variable positions [T, T+S-1] and
/// the gamma*(S-1)+1 (memory 1) or gamma*(S-3)+1 (memory 2) consecutive block
/// rows ending at the last row of group T+S-1. The first window extends down
/// to row 0 and the last one through the terminating rows, so a full-length
/// window sees the whole matrix. The default stride makes consecutive
/// windows share exactly one block row; stride 1 is available as an option.
struct WindowSpec {
    int S = 2;           // window size in block-column groups (positions)
    int memory_mode = 1; // 1 or 2; must match the code's memory
    int stride = 0;      // 0 = one-shared-block-row default (S - 2m + 1)

    void validate() const;
    int block_rows_in_window() const { return 3 * (S - (2 * memory_mode - 1)) + 1; }
    int effective_stride() const { return stride > 0 ? stride : S - 2 * memory_mode + 1; }
};

struct WindowPosition {
    int anchor = 0;               // first variable position in the window
    int pos_lo = 0, pos_hi = 0;   // variable position range
    int row_lo = 0, row_hi = 0;   // block-row range
};

std::vector<WindowPosition> window_positions(const ScCode& sc, const WindowSpec& w);

struct WindowReport {
    int p = 0, L = 0, m = 0, S = 0;
    int stride = 0;
    std::string method; // "line" or "brute"
    std::vector<WindowPosition> positions;
    std::vector<long long> per_position;
    long long total = 0;          // sum over sliding positions
    long long standard_total = 0; // full-matrix count
    long long r2_num = 0, r2_den = 1; // r2 = total / standard_total, exact
    std::string placement_note;
};

WindowReport count_abs_windowed(const ScCode& sc, const WindowSpec& w, bool brute = false);

} // namespace sclift
