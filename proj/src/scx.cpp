#include "chamber/scx.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace chamber {

void write_scx(const Complex& k, std::ostream& out) {
    out << "scx 1\n";
    for (int v = 0; v < k.vertex_count(); ++v) out << "vertex " << v << ' ' << k.label(v) << '\n';
    for (const auto& f : k.facets()) {
        out << "facet";
        for (int v : f) out << ' ' << v;
        out << '\n';
    }
}

std::string to_scx(const Complex& k) {
    std::ostringstream out;
    write_scx(k, out);
    return out.str();
}

Complex read_scx(std::istream& in) {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> facets;
    bool header_seen = false;
    bool facets_started = false;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string word;
        if (!(tokens >> word)) continue;  // blank
        if (!header_seen) {
            int version = -1;
            if (word != "scx" || !(tokens >> version) || version != 1)
                throw std::invalid_argument("SCX: expected header 'scx 1'");
            header_seen = true;
            continue;
        }
        if (word == "vertex") {
            if (facets_started) throw std::invalid_argument("SCX: vertex after facet");
            int id;
            std::string label;
            if (!(tokens >> id >> label) || id != static_cast<int>(labels.size()))
                throw std::invalid_argument("SCX: vertex ids must be 0..m-1 in order");
            labels.push_back(label);
        } else if (word == "facet") {
            facets_started = true;
            std::vector<int> ids;
            int id;
            while (tokens >> id) {
                if (id < 0 || id >= static_cast<int>(labels.size()))
                    throw std::invalid_argument("SCX: facet id out of range");
                if (!ids.empty() && id <= ids.back())
                    throw std::invalid_argument("SCX: facet ids must be strictly increasing");
                ids.push_back(id);
            }
            if (ids.empty()) throw std::invalid_argument("SCX: empty facet line");
            facets.push_back(std::move(ids));
        } else {
            throw std::invalid_argument("SCX: unknown directive '" + word + "'");
        }
    }
    if (!header_seen) throw std::invalid_argument("SCX: missing header");
    return Complex::from_facet_ids(labels, std::move(facets));
}

Complex scx_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_scx(in);
}

void write_scx_file(const Complex& k, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_scx(k, out);
}

Complex read_scx_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_scx(in);
}

}  // namespace chamber
