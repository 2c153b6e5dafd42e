#include "rumor/csv.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rumor/errors.hpp"

namespace rumor::csv {

std::string format(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format17(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v,
                             std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string trajectory_csv(const Trajectory& traj,
                           const std::vector<std::string>& comment) {
    std::ostringstream os;
    for (const auto& line : comment) os << "# " << line << "\n";
    os << "t,I,S1,S2,H,R1,R2\n";
    for (const auto& s : traj.samples) {
        os << format17(s.t) << ',' << format17(s.state.i) << ','
           << format17(s.state.s1) << ',' << format17(s.state.s2) << ','
           << format17(s.state.h) << ',' << format17(s.state.r1) << ','
           << format17(s.state.r2) << "\n";
    }
    return os.str();
}

std::vector<std::vector<double>> parse_csv(const std::string& text,
                                           const std::string& expected_header) {
    std::vector<std::vector<double>> rows;
    std::istringstream is(text);
    std::string line;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != expected_header) {
                throw ConfigError("unexpected CSV header '" + line + "' (wanted '" +
                                  expected_header + "')");
            }
            header_seen = true;
            continue;
        }
        std::vector<double> row;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t comma = line.find(',', pos);
            std::string cell = line.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            double v = 0.0;
            auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
                std::ostringstream os;
                os << "bad numeric cell '" << cell << "' on line " << lineno;
                throw ConfigError(os.str());
            }
            row.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    if (!header_seen) throw ConfigError("CSV text has no header line");
    return rows;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw ConfigError("write to '" + path + "' failed");
}

} // namespace rumor::csv
