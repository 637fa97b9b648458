#include "cyclochar/table.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "cyclochar/errors.hpp"

namespace cyclochar {

namespace {

using Json = nlohmann::ordered_json;

std::string hash_hex(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

Json partition_json(const Partition& p) {
    Json out = Json::array();
    for (int part : p.parts()) out.push_back(part);
    return out;
}

Json multipartition_json(const MultiPartition& mp) {
    Json out = Json::array();
    for (int i = 0; i < mp.components(); ++i) out.push_back(partition_json(mp.comp(i)));
    return out;
}

Json poly_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [mono, c] : p.terms()) {
        Json t;
        t["q"] = mono.q;
        t["u"] = mono.u;
        t["num"] = to_string(rat_num(c));
        t["den"] = to_string(rat_den(c));
        terms.push_back(std::move(t));
    }
    return terms;
}

MultiPartition multipartition_from_json(const Json& j) {
    std::vector<Partition> comps;
    for (const auto& comp : j) {
        std::vector<int> parts;
        for (const auto& v : comp) parts.push_back(v.get<int>());
        comps.push_back(Partition(std::move(parts)));
    }
    return MultiPartition(std::move(comps));
}

LaurentPoly poly_from_json(const Json& j, int nvars) {
    LaurentPoly out(nvars);
    for (const auto& t : j) {
        std::vector<int> u = t.at("u").get<std::vector<int>>();
        if (static_cast<int>(u.size()) != nvars)
            throw IoError("table value has wrong u exponent arity");
        Rational c = make_rational(BigInt(t.at("num").get<std::string>()),
                                   BigInt(t.at("den").get<std::string>()));
        out.add_term(Monomial{t.at("q").get<int>(), std::move(u)}, c);
    }
    return out;
}

}  // namespace

std::string table_to_json(const CharTable& table) {
    Json doc;
    doc["m"] = table.m;
    doc["n"] = table.n;
    doc["format"] = kTableFormatVersion;
    doc["order"] = kCanonicalOrderName;
    doc["order_hash"] = hash_hex(canonical_order_hash(table.m, table.n));
    Json rows = Json::array();
    for (std::size_t i = 0; i < table.order.size(); ++i) {
        for (std::size_t j = 0; j < table.order.size(); ++j) {
            Json row;
            row["lambda"] = multipartition_json(table.order[i]);
            row["mu"] = multipartition_json(table.order[j]);
            row["value"] = poly_json(table.values[i][j]);
            rows.push_back(std::move(row));
        }
    }
    doc["rows"] = std::move(rows);
    return doc.dump();
}

CharTable table_from_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& e) {
        throw IoError(std::string("table parse failure: ") + e.what());
    }
    CharTable table;
    table.m = doc.at("m").get<int>();
    table.n = doc.at("n").get<int>();
    if (doc.at("format").get<int>() != kTableFormatVersion)
        throw CacheVersionMismatch("table format version mismatch");
    if (doc.at("order").get<std::string>() != kCanonicalOrderName)
        throw CacheVersionMismatch("table order name mismatch");
    if (doc.at("order_hash").get<std::string>() !=
        hash_hex(canonical_order_hash(table.m, table.n)))
        throw CacheVersionMismatch("table order hash mismatch");

    table.order = multipartitions(table.n, table.m);
    std::size_t dim = table.order.size();
    const Json& rows = doc.at("rows");
    if (rows.size() != dim * dim) throw IoError("table row count does not cover the order");
    table.values.assign(dim, std::vector<LaurentPoly>(dim));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j, ++idx) {
            const Json& row = rows[idx];
            if (multipartition_from_json(row.at("lambda")) != table.order[i] ||
                multipartition_from_json(row.at("mu")) != table.order[j])
                throw IoError("table rows are not in canonical order");
            table.values[i][j] = poly_from_json(row.at("value"), table.m);
        }
    }
    return table;
}

std::string table_to_csv(const CharTable& table, const std::vector<std::string>* u_names) {
    std::string out = "lambda,mu,value\n";
    for (std::size_t i = 0; i < table.order.size(); ++i) {
        for (std::size_t j = 0; j < table.order.size(); ++j) {
            out += "\"" + to_string(table.order[i]) + "\",\"" + to_string(table.order[j]) +
                   "\",\"" + to_string(table.values[i][j], u_names) + "\"\n";
        }
    }
    return out;
}

std::string table_to_latex(const CharTable& table, const std::vector<std::string>* u_names) {
    std::size_t dim = table.order.size();
    std::string out = "\\begin{tabular}{l";
    for (std::size_t j = 0; j < dim; ++j) out += "c";
    out += "}\n\\toprule\n";
    for (std::size_t j = 0; j < dim; ++j) out += " & $" + to_string(table.order[j]) + "$";
    out += " \\\\\n\\midrule\n";
    for (std::size_t i = 0; i < dim; ++i) {
        out += "$" + to_string(table.order[i]) + "$";
        for (std::size_t j = 0; j < dim; ++j)
            out += " & $" + to_latex(table.values[i][j], u_names) + "$";
        out += " \\\\\n";
    }
    out += "\\bottomrule\n\\end{tabular}\n";
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << content;
    if (!f) throw IoError("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for reading: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::optional<CharTable> load_table_cache(const std::string& path, int m, int n) {
    if (!std::filesystem::exists(path)) return std::nullopt;
    CharTable table = table_from_json(read_file(path));
    if (table.m != m || table.n != n)
        throw CacheVersionMismatch("cache file was built for different (m, n)");
    return table;
}

}  // namespace cyclochar
