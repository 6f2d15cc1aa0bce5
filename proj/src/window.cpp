#include "sclift/window.hpp"

#include <numeric>
#include <stdexcept>

namespace sclift {

void WindowSpec::validate() const {
    if (memory_mode == 1) {
        if (S < 2)
            throw std::invalid_argument("window: memory-1 placement needs S >= 2");
    } else if (memory_mode == 2) {
        if (S < 4)
            throw std::invalid_argument("window: memory-2 placement needs S >= 4");
    } else {
        throw std::invalid_argument("window: memory mode must be 1 or 2");
    }
    if (stride < 0)
        throw std::invalid_argument("window: stride must be positive (or 0 for default)");
}

std::vector<WindowPosition> window_positions(const ScCode& sc, const WindowSpec& w) {
    w.validate();
    // degenerate uncoupled cuts (m = 0) are measured with memory-1 placement
    if (w.memory_mode != std::max(1, sc.m))
        throw std::invalid_argument("window: memory mode " + std::to_string(w.memory_mode) +
                                    " does not match code memory " + std::to_string(sc.m));
    if (w.S > sc.L)
        throw std::invalid_argument("window: S exceeds the coupling length");
    const int m = sc.m;
    const int step = w.effective_stride();
    std::vector<WindowPosition> out;
    for (int T = 0; T + w.S <= sc.L; T += step) {
        WindowPosition pos;
        pos.anchor = T;
        pos.pos_lo = T;
        pos.pos_hi = T + w.S - 1;
        pos.row_hi = 3 * (T + w.S) - 1;
        pos.row_lo = pos.row_hi - w.block_rows_in_window() + 1; // = 3*(T+2m-1) - 1
        if (T == 0)
            pos.row_lo = 0; // first window reaches the top of the matrix
        if (T + w.S == sc.L)
            pos.row_hi = 3 * (sc.L + m) - 1; // final window runs through termination
        out.push_back(pos);
    }
    return out;
}

WindowReport count_abs_windowed(const ScCode& sc, const WindowSpec& w, bool brute) {
    WindowReport rep;
    rep.p = sc.p;
    rep.L = sc.L;
    rep.m = sc.m;
    rep.S = w.S;
    rep.stride = w.effective_stride();
    rep.method = brute ? "brute" : "line";
    rep.positions = window_positions(sc, w);
    rep.placement_note =
        "window rows end at the last block row of group T+S-1 and span gamma*(S-1)+1 "
        "(memory 1) or gamma*(S-3)+1 (memory 2) rows; boundary windows are extended to "
        "the matrix edge; stride " +
        std::to_string(rep.stride) + (w.stride == 0 ? " (one shared block row)" : " (override)");

    CirculantGrid grid;
    if (brute)
        grid = sc.terminated_grid();
    for (const auto& pos : rep.positions) {
        long long n;
        if (brute) {
            CirculantGrid sub;
            sub.block_size = grid.block_size;
            sub.block_rows = pos.row_hi - pos.row_lo + 1;
            sub.block_cols = (pos.pos_hi - pos.pos_lo + 1) * sc.p;
            sub.exp.assign(static_cast<size_t>(sub.block_rows) * sub.block_cols, -1);
            for (int r = 0; r < sub.block_rows; ++r)
                for (int c = 0; c < sub.block_cols; ++c)
                    sub.exp[static_cast<size_t>(r) * sub.block_cols + c] =
                        grid.exponent(pos.row_lo + r, pos.pos_lo * sc.p + c);
            n = count_six_cycles_block(sub);
        } else {
            n = count_cycles_in_range(sc, pos.row_lo, pos.row_hi, pos.pos_lo, pos.pos_hi);
        }
        rep.per_position.push_back(n);
        rep.total += n;
    }
    rep.standard_total = brute ? count_six_cycles_block(sc.terminated_grid()) : count_total(sc);
    rep.r2_num = rep.total;
    rep.r2_den = rep.standard_total;
    if (rep.r2_den != 0) {
        long long g = std::gcd(rep.r2_num < 0 ? -rep.r2_num : rep.r2_num, rep.r2_den);
        if (g > 1) {
            rep.r2_num /= g;
            rep.r2_den /= g;
        }
    }
    return rep;
}

} // namespace sclift
