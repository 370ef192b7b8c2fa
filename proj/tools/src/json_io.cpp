#include "qlogic_cli/json_io.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace qlogic::cli {

namespace {

const Json &field(const Json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        throw InputError(std::string("missing field \"") + name + "\"");
    }
    return j.at(name);
}

int dim_field(const Json &j) {
    const Json &d = field(j, "dim");
    if (!d.is_number_integer() || d.get<long long>() < 1) {
        throw InputError("\"dim\" must be a positive integer");
    }
    return d.get<int>();
}

}  // namespace

Json load_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    return Json::parse(in);
}

std::string load_text_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Json complex_to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InputError("complex numbers are [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return {{"dim", m.rows()}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const Json &j) {
    const int d = dim_field(j);
    const Json &rows = field(j, "entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
        throw DimMismatch("matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(d));
    }
    ComplexMatrix m(d, d);
    for (int r = 0; r < d; ++r) {
        const Json &row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != d) {
            throw DimMismatch("matrix row " + std::to_string(r) + " has the wrong length");
        }
        for (int c = 0; c < d; ++c) {
            m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
        }
    }
    require_finite(m);
    return m;
}

Projection projection_from_json(const Json &j, const Tolerance &tol) {
    return Projection::from_matrix(matrix_from_json(j), tol);
}

QSet qset_from_json(const Json &j, const Registry &names, const Tolerance &tol) {
    if (j.is_string()) {
        const auto it = names.find(j.get<std::string>());
        if (it == names.end()) {
            throw UnknownName(j.get<std::string>());
        }
        return it->second;
    }
    const int d = dim_field(j);
    if (j.contains("check")) {
        return check_embed(HFSet::parse(j.at("check").get<std::string>()), d);
    }
    const Json &entries = field(j, "entries");
    if (!entries.is_array()) {
        throw InputError("\"entries\" must be an array");
    }
    std::vector<QEntry> out;
    for (const Json &e : entries) {
        QSet child = qset_from_json(field(e, "child"), names, tol);
        Projection weight = projection_from_json(field(e, "weight"), tol);
        out.push_back({std::move(child), std::move(weight)});
    }
    return QSet::make(d, std::move(out));
}

Registry registry_from_json(const Json &j, const Tolerance &tol) {
    const Json &names = field(j, "names");
    if (!names.is_object()) {
        throw InputError("\"names\" must be an object");
    }
    const std::optional<int> default_dim = j.contains("dim") ? std::optional<int>(dim_field(j)) : std::nullopt;

    Registry done;
    std::set<std::string> active;
    std::function<void(const std::string &)> resolve;
    // Loads every name the document references before `name` itself.
    std::function<void(const Json &)> visit = [&](const Json &node) {
        if (node.is_string()) {
            resolve(node.get<std::string>());
        } else if (node.is_object() && node.contains("entries") && node.at("entries").is_array()) {
            for (const Json &e : node.at("entries")) {
                if (e.is_object() && e.contains("child")) {
                    visit(e.at("child"));
                }
            }
        }
    };
    resolve = [&](const std::string &name) {
        if (done.count(name) != 0) {
            return;
        }
        if (!names.contains(name)) {
            throw UnknownName(name);
        }
        if (!active.insert(name).second) {
            throw InputError("cyclic reference through \"" + name + "\"");
        }
        Json node = names.at(name);
        visit(node);
        if (node.is_object() && !node.contains("dim") && default_dim) {
            node["dim"] = *default_dim;
        }
        done.emplace(name, qset_from_json(node, done, tol));
        active.erase(name);
    };
    for (const auto &item : names.items()) {
        resolve(item.key());
    }
    return done;
}

Observable observable_from_json(const Json &j, const Tolerance &tol) {
    Observable x(matrix_from_json(j), tol);
    if (j.contains("spectrum")) {
        std::vector<double> given = j.at("spectrum").get<std::vector<double>>();
        std::sort(given.begin(), given.end());
        given.erase(std::unique(given.begin(), given.end()), given.end());
        const std::vector<double> &actual = x.spectrum();
        bool same = given.size() == actual.size();
        for (std::size_t k = 0; same && k < given.size(); ++k) {
            same = std::abs(given[k] - actual[k]) <= tol.eps_compare * std::max(1.0, std::abs(actual[k]));
        }
        if (!same) {
            throw InputError("\"spectrum\" does not match the matrix");
        }
    }
    return x;
}

Json real_to_json(const QuantumReal &u) {
    Json levels = Json::array();
    for (const Projection &p : u.levels()) {
        levels.push_back(matrix_to_json(p.matrix()));
    }
    return {{"jumps", u.jumps()}, {"levels", std::move(levels)}};
}

QuantumReal real_from_json(const Json &j, const Tolerance &tol) {
    std::vector<double> jumps = field(j, "jumps").get<std::vector<double>>();
    std::vector<Projection> levels;
    for (const Json &m : field(j, "levels")) {
        levels.push_back(projection_from_json(m, tol));
    }
    return QuantumReal(std::move(jumps), std::move(levels), tol);
}

StateVector state_from_json(const Json &j) {
    const int d = dim_field(j);
    const Json &amps = field(j, "amplitudes");
    if (!amps.is_array() || static_cast<int>(amps.size()) != d) {
        throw DimMismatch("state has the wrong number of amplitudes");
    }
    ComplexVector v(d);
    for (int k = 0; k < d; ++k) {
        v(k) = complex_from_json(amps[static_cast<std::size_t>(k)]);
    }
    return StateVector(v);
}

}  // namespace qlogic::cli
