#include "recon/io.hpp"

#include <cmath>
#include <cstdio>
#include <cctype>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace recon {
namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path + " for writing");
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open " + path);
    return is;
}

void write_id_list(std::ostream& os, const int* ids, std::size_t n) {
    os << '[';
    for (std::size_t i = 0; i < n; ++i) {
        if (i) os << ',';
        os << ids[i];
    }
    os << ']';
}

}  // namespace

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    if (!std::strpbrk(buf, ".eE")) std::strcat(buf, ".0");
    return buf;
}

PointCloud read_cloud_csv(std::istream& is) {
    std::vector<Point> pts;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        Point p;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            std::size_t used = 0;
            double v;
            try {
                v = std::stod(field, &used);
            } catch (const std::exception&) {
                throw std::runtime_error("bad CSV value at line " + std::to_string(lineno));
            }
            while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used])))
                ++used;
            if (used != field.size())
                throw std::runtime_error("bad CSV value at line " + std::to_string(lineno));
            p.push_back(v);
        }
        if (p.empty()) throw std::runtime_error("empty CSV row at line " + std::to_string(lineno));
        pts.push_back(std::move(p));
    }
    return make_cloud(std::move(pts));
}

PointCloud read_cloud_csv_file(const std::string& path) {
    auto is = open_in(path);
    return read_cloud_csv(is);
}

void write_cloud_csv(const PointCloud& cloud, std::ostream& os) {
    for (const Point& p : cloud.points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) os << ',';
            os << format_double(p[i]);
        }
        os << '\n';
    }
}

void write_cloud_csv_file(const PointCloud& cloud, const std::string& path) {
    auto os = open_out(path);
    write_cloud_csv(cloud, os);
}

void write_complex_json(const SimplicialComplex& k, std::ostream& os) {
    os << "{\"cap\":" << k.dim_cap << ",\"simplices\":[";
    for (std::size_t i = 0; i < k.simplices.size(); ++i) {
        if (i) os << ',';
        write_id_list(os, k.simplices[i].data(), k.simplices[i].size());
    }
    os << "]}\n";
}

void write_complex_json_file(const SimplicialComplex& k, const std::string& path) {
    auto os = open_out(path);
    write_complex_json(k, os);
}

SimplicialComplex read_complex_json_file(const std::string& path) {
    auto is = open_in(path);
    nlohmann::json j;
    is >> j;
    SimplicialComplex k;
    k.dim_cap = j.at("cap").get<int>();
    for (const auto& item : j.at("simplices")) {
        Simplex s = item.get<std::vector<int>>();
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::runtime_error("simplex ids must be strictly increasing");
        k.simplices.push_back(std::move(s));
    }
    std::sort(k.simplices.begin(), k.simplices.end(), simplex_less);
    return k;
}

void write_filtration_json(const Filtration& f, std::ostream& os) {
    os << "{\"cap\":" << f.dim_cap << ",\"alpha_max\":" << format_double(f.alpha_max)
       << ",\"simplices\":[";
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
        if (i) os << ',';
        write_id_list(os, f.entries[i].simplex.data(), f.entries[i].simplex.size());
    }
    os << "],\"values\":[";
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
        if (i) os << ',';
        os << format_double(f.entries[i].value);
    }
    os << "]}\n";
}

void write_metric_csv(const MetricMatrix& m, std::ostream& os) {
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (j) os << ',';
            os << format_double(m(i, j));
        }
        os << '\n';
    }
}

void write_metric_csv_file(const MetricMatrix& m, const std::string& path) {
    auto os = open_out(path);
    write_metric_csv(m, os);
}

void write_diagram_text(const PersistenceDiagram& d, std::ostream& os) {
    for (const PersistenceInterval& iv : d.intervals)
        os << iv.dim << ' ' << format_double(iv.birth) << ' ' << format_double(iv.death)
           << '\n';
}

std::string diagram_json(const PersistenceDiagram& d) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < d.intervals.size(); ++i) {
        if (i) os << ',';
        const auto& iv = d.intervals[i];
        os << '[' << iv.dim << ',' << format_double(iv.birth) << ',';
        if (std::isinf(iv.death)) os << "\"inf\"";
        else os << format_double(iv.death);
        os << ']';
    }
    os << "]";
    return os.str();
}

void write_shadow_json(const ShadowComplex& s, std::ostream& os) {
    os << "{\"points\":[";
    for (int i = 0; i < s.points.size(); ++i) {
        if (i) os << ',';
        os << '[' << format_double(s.points[i][0]) << ',' << format_double(s.points[i][1])
           << ']';
    }
    os << "],\"segments\":[";
    for (std::size_t i = 0; i < s.segments.size(); ++i) {
        if (i) os << ',';
        write_id_list(os, s.segments[i].data(), 2);
    }
    os << "],\"triangles\":[";
    for (std::size_t i = 0; i < s.triangles.size(); ++i) {
        if (i) os << ',';
        write_id_list(os, s.triangles[i].data(), 3);
    }
    os << "],\"eps\":" << format_double(s.eps) << ",\"delta\":" << format_double(s.delta)
       << "}\n";
}

void write_shadow_json_file(const ShadowComplex& s, const std::string& path) {
    auto os = open_out(path);
    write_shadow_json(s, os);
}

ShadowComplex read_shadow_json_file(const std::string& path) {
    auto is = open_in(path);
    nlohmann::json j;
    is >> j;
    ShadowComplex s;
    std::vector<Point> pts;
    for (const auto& item : j.at("points"))
        pts.push_back(item.get<std::vector<double>>());
    s.points = make_cloud(std::move(pts));
    for (const auto& item : j.at("segments")) {
        auto v = item.get<std::vector<int>>();
        if (v.size() != 2) throw std::runtime_error("segment needs two vertex ids");
        s.segments.push_back({v[0], v[1]});
    }
    for (const auto& item : j.at("triangles")) {
        auto v = item.get<std::vector<int>>();
        if (v.size() != 3) throw std::runtime_error("triangle needs three vertex ids");
        s.triangles.push_back({v[0], v[1], v[2]});
    }
    s.eps = j.at("eps").get<double>();
    s.delta = j.at("delta").get<double>();
    return s;
}

ShapeSpec read_shape_spec_json_file(const std::string& path) {
    auto is = open_in(path);
    nlohmann::json j;
    is >> j;
    const std::string kind = j.at("kind").get<std::string>();

    ShapeSpec spec;
    if (kind == "circle") {
        spec = circle_spec(j.value("radius", 1.0));
    } else if (kind == "lemniscate") {
        spec = lemniscate_spec(j.value("scale", 1.0));
    } else if (kind == "lissajous") {
        if (j.contains("freq_x") || j.contains("freq_y") || j.contains("phase")) {
            if (!j.contains("delta"))
                throw std::runtime_error(
                    "custom lissajous curves need an explicit \"delta\"");
            spec = lissajous_spec(j.value("scale", 1.0), j.value("freq_x", 3),
                                  j.value("freq_y", 2), j.value("phase", 0.0),
                                  j.at("delta").get<double>());
        } else {
            spec = lissajous_spec(j.value("scale", 1.0));
        }
    } else if (kind == "embedded_graph") {
        GraphShape g;
        for (const auto& item : j.at("vertices"))
            g.vertices.push_back(item.get<std::vector<double>>());
        for (const auto& item : j.at("edges")) {
            auto v = item.get<std::vector<int>>();
            if (v.size() != 2) throw std::runtime_error("edge needs two vertex ids");
            g.edges.push_back({v[0], v[1]});
        }
        if (!j.contains("delta"))
            throw std::runtime_error("embedded_graph specs need an explicit \"delta\"");
        spec = graph_spec(std::move(g), j.at("delta").get<double>());
    } else {
        throw std::runtime_error("unsupported shape kind: " + kind);
    }

    if (j.contains("delta")) spec.distortion = j.at("delta").get<double>();
    if (j.contains("b")) {
        spec.shortest_cycle = j.at("b").get<double>();
        spec.convexity_radius = *spec.shortest_cycle / 4.0;
    }
    if (j.contains("rho")) spec.convexity_radius = j.at("rho").get<double>();
    return spec;
}

}  // namespace recon
