#include "fishcat/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace fishcat {

std::string render_matching(const Matching& m) {
    int len = m.points();
    if (len == 0) return "(empty matching)\n";
    std::vector<Arc> arcs = m.arcs();
    // greedy row packing: arcs sharing a row never overlap horizontally
    std::vector<int> row(arcs.size(), 0);
    int rows = 0;
    std::vector<std::vector<int>> taken;  // per row, rightmost occupied column
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        std::size_t r = 0;
        while (r < taken.size() && !taken[r].empty() && taken[r].back() >= arcs[i].open) ++r;
        if (r == taken.size()) taken.push_back({});
        taken[r].push_back(arcs[i].close);
        row[i] = static_cast<int>(r);
        rows = std::max(rows, row[i] + 1);
    }
    int width = 2 * len - 1;
    std::vector<std::string> grid(rows, std::string(width, ' '));
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        int r = rows - 1 - row[i];
        int a = 2 * arcs[i].open, b = 2 * arcs[i].close;
        grid[r][a] = '/';
        grid[r][b] = '\\';
        for (int c = a + 1; c < b; ++c)
            if (grid[r][c] == ' ') grid[r][c] = '_';
    }
    std::ostringstream out;
    for (const std::string& line : grid) out << line << "\n";
    for (int p = 0; p < len; ++p) {
        out << static_cast<char>('0' + (p + 1) % 10);
        if (p + 1 < len) out << ' ';
    }
    out << "\n";
    return out.str();
}

std::string render_dyck(const DyckPath& path) {
    int len = static_cast<int>(path.steps.size());
    if (len == 0) return "(empty path)\n";
    int top = dyck_height(path);
    std::vector<std::string> grid(top, std::string(len, ' '));
    int h = 0;
    for (int p = 0; p < len; ++p) {
        if (path.steps[p] == 'U') {
            grid[top - 1 - h][p] = '/';
            ++h;
        } else {
            --h;
            grid[top - 1 - h][p] = '\\';
        }
    }
    std::ostringstream out;
    for (const std::string& line : grid) out << line << "\n";
    return out.str();
}

std::string render_poset(const Poset& p) {
    std::ostringstream out;
    if (p.size() == 0) return "(empty poset)\n";
    std::vector<int> lv = down_levels(p);
    int top = *std::max_element(lv.begin(), lv.end());
    for (int level = top; level >= 0; --level) {
        out << "level " << level << ":";
        for (int i = 0; i < p.size(); ++i)
            if (lv[i] == level) out << " " << i + 1;
        out << "\n";
    }
    out << "relations:";
    bool any = false;
    for (auto [i, j] : p.relations()) {
        out << " " << i + 1 << "<" << j + 1;
        any = true;
    }
    if (!any) out << " (none)";
    out << "\n";
    return out.str();
}

}  // namespace fishcat
