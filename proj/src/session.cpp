#include <algorithm>
#include "torhilb/session.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace torhilb {

using nlohmann::json;

const Ideal* Session::find_ideal(const std::string& name) const {
    for (const auto& [n, v] : ideals)
        if (n == name) return &v;
    return nullptr;
}

const FPModule* Session::find_module(const std::string& name) const {
    for (const auto& [n, v] : modules)
        if (n == name) return &v;
    return nullptr;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_top_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Polynomial parse_homogeneous(const RingPtr& ring, const std::string& text, int line) {
    Polynomial f;
    try {
        f = parse_polynomial(ring, text);
    } catch (const ParseError& e) {
        throw SessionError(std::string(e.what()) + " in '" + text + "'", line,
                           static_cast<int>(e.position) + 1);
    }
    if (!f.is_homogeneous())
        throw SessionError("polynomial input must be homogeneous: '" + text + "'", line, 1);
    return f;
}

// matrix literal [[f11, f12], [f21, f22]]; rows of the presentation matrix
std::vector<std::vector<std::string>> parse_matrix_rows(const std::string& text, int line) {
    std::string s = trim(text);
    if (s.empty() || s.front() != '[' || s.back() != ']')
        throw SessionError("expected a bracketed matrix", line, 1);
    std::string inner = s.substr(1, s.size() - 2);
    std::vector<std::vector<std::string>> rows;
    for (const auto& row_text : split_top_commas(inner)) {
        std::string r = trim(row_text);
        if (r.empty() || r.front() != '[' || r.back() != ']')
            throw SessionError("expected a bracketed matrix row", line, 1);
        rows.push_back(split_top_commas(r.substr(1, r.size() - 2)));
        if (rows.back().size() != rows.front().size())
            throw SessionError("matrix rows have unequal lengths", line, 1);
    }
    if (rows.empty()) throw SessionError("empty matrix", line, 1);
    return rows;
}

FPModule parse_module_expr(const Session& session, const std::string& expr, int line) {
    std::string s = trim(expr);
    if (s == "R") return FPModule::free_module(session.ring, 1);
    if (s.rfind("R^", 0) == 0) {
        int rank = 0;
        try {
            rank = std::stoi(s.substr(2));
        } catch (...) {
            throw SessionError("bad free module rank in '" + s + "'", line, 1);
        }
        if (rank < 0) throw SessionError("negative rank", line, 1);
        return FPModule::free_module(session.ring, rank);
    }
    if (s.rfind("R/", 0) == 0 || s.rfind("R /", 0) == 0) {
        std::string name = trim(s.substr(s.find('/') + 1));
        const Ideal* ideal = session.find_ideal(name);
        if (!ideal) throw SessionError("undefined ideal '" + name + "'", line, 1);
        return FPModule::cyclic_quotient(*ideal);
    }
    if (s.rfind("coker", 0) == 0) {
        auto rows = parse_matrix_rows(trim(s.substr(5)), line);
        int nrows = static_cast<int>(rows.size());
        int ncols = static_cast<int>(rows.front().size());
        std::vector<ModVec> cols;
        for (int j = 0; j < ncols; ++j) {
            std::vector<Polynomial> entries;
            for (int r = 0; r < nrows; ++r)
                entries.push_back(parse_homogeneous(session.ring, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)], line));
            cols.push_back(ModVec(std::move(entries)));
        }
        return FPModule::from_columns(session.ring, nrows, std::move(cols));
    }
    throw SessionError("bad module expression '" + s + "' (use R, R^k, R/I or coker [[...]])",
                       line, 1);
}

}  // namespace

Session parse_session(const std::string& text, const RunOptions& options) {
    Session session;
    std::int64_t characteristic = 32003;
    std::vector<std::string> vars;
    OrderKind kind = OrderKind::DegRevLex;
    bool saw_ring_config = false;

    auto build_ring = [&](int line) {
        if (session.ring) return;
        if (vars.empty()) throw SessionError("no ring declared before this statement", line, 1);
        if (options.characteristic) characteristic = *options.characteristic;
        std::vector<int> priority;
        if (options.priority) {
            if (options.priority->size() != vars.size())
                throw SessionError("variable priority must list every ring variable", line, 1);
            for (const auto& name : *options.priority) {
                auto it = std::find(vars.begin(), vars.end(), name);
                if (it == vars.end())
                    throw SessionError("unknown variable '" + name + "' in the priority list",
                                       line, 1);
                priority.push_back(static_cast<int>(it - vars.begin()));
            }
        }
        try {
            session.ring = Ring::make(characteristic, vars, kind, priority);
        } catch (const std::exception& e) {
            throw SessionError(e.what(), line, 1);
        }
    };

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string stmt = raw;
        auto hash = stmt.find('#');
        if (hash != std::string::npos) stmt = stmt.substr(0, hash);
        stmt = trim(stmt);
        if (stmt.empty()) continue;

        std::istringstream ls(stmt);
        std::string head;
        ls >> head;
        std::string rest = trim(stmt.substr(head.size()));

        if (head == "char") {
            if (session.ring) throw SessionError("char must precede the ring", line, 1);
            try {
                characteristic = std::stoll(rest);
            } catch (...) {
                throw SessionError("bad characteristic '" + rest + "'", line, 1);
            }
            saw_ring_config = true;
        } else if (head == "ring" || head == "vars") {
            if (session.ring) throw SessionError("the ring is already declared", line, 1);
            for (auto& tok : split_top_commas(rest))
                for (auto& v : split_ws(tok)) {
                    if (!valid_name(v)) throw SessionError("bad variable name '" + v + "'", line, 1);
                    vars.push_back(v);
                }
            if (vars.empty()) throw SessionError("ring needs at least one variable", line, 1);
            saw_ring_config = true;
        } else if (head == "order") {
            if (session.ring) throw SessionError("order must precede ideals and modules", line, 1);
            if (rest == "degrevlex")
                kind = OrderKind::DegRevLex;
            else if (rest == "deglex")
                kind = OrderKind::DegLex;
            else
                throw SessionError("unknown order '" + rest + "'", line, 1);
            saw_ring_config = true;
        } else if (head == "ideal") {
            auto eq = rest.find('=');
            if (eq == std::string::npos) throw SessionError("expected 'ideal NAME = ...'", line, 1);
            std::string name = trim(rest.substr(0, eq));
            if (!valid_name(name)) throw SessionError("bad ideal name '" + name + "'", line, 1);
            if (session.find_ideal(name) || session.find_module(name))
                throw SessionError("name '" + name + "' is already defined", line, 1);
            build_ring(line);
            std::vector<Polynomial> gens;
            for (const auto& g : split_top_commas(trim(rest.substr(eq + 1))))
                gens.push_back(parse_homogeneous(session.ring, g, line));
            session.ideals.emplace_back(name, Ideal(session.ring, std::move(gens)));
        } else if (head == "module") {
            auto eq = rest.find('=');
            if (eq == std::string::npos) throw SessionError("expected 'module NAME = ...'", line, 1);
            std::string name = trim(rest.substr(0, eq));
            if (!valid_name(name)) throw SessionError("bad module name '" + name + "'", line, 1);
            if (session.find_ideal(name) || session.find_module(name))
                throw SessionError("name '" + name + "' is already defined", line, 1);
            build_ring(line);
            session.modules.emplace_back(name,
                                         parse_module_expr(session, trim(rest.substr(eq + 1)), line));
        } else if (head == "task") {
            SessionTask task;
            task.line = line;
            std::istringstream ts(rest);
            ts >> task.kind;
            static const std::vector<std::string> kinds = {
                "sample",     "diagonal",   "mixed",    "fit",    "prop5",  "theorem6",
                "corollary7", "corollary8", "theorem9", "prop10", "remark"};
            if (std::find(kinds.begin(), kinds.end(), task.kind) == kinds.end())
                throw SessionError("unknown task kind '" + task.kind + "'", line, 1);
            std::string kv;
            while (ts >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw SessionError("expected key=value, got '" + kv + "'", line, 1);
                task.params[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            if (task.kind != "remark") {
                build_ring(line);
                // referenced names must already be defined
                std::vector<std::string> ideal_keys = {"I"};
                if (task.kind != "diagonal" && task.kind != "corollary7" && task.kind != "prop5")
                    ideal_keys.push_back("J");
                for (const auto& key : ideal_keys) {
                    auto it = task.params.find(key);
                    if (it == task.params.end())
                        throw SessionError("task needs an ideal parameter '" + key + "'", line, 1);
                    if (!session.find_ideal(it->second))
                        throw SessionError("undefined ideal '" + it->second + "'", line, 1);
                }
                for (const std::string key : {"M", "N"}) {
                    auto it = task.params.find(key);
                    if (it == task.params.end())
                        throw SessionError("task needs a module parameter '" + std::string(key) +
                                               "'", line, 1);
                    if (!session.find_module(it->second))
                        throw SessionError("undefined module '" + it->second + "'", line, 1);
                }
                if (task.params.count("i") == 0)
                    throw SessionError("task needs i=<nonnegative>", line, 1);
            }
            session.tasks.push_back(std::move(task));
        } else {
            throw SessionError("unknown statement '" + head + "'", line, 1);
        }
    }
    if (!saw_ring_config && session.tasks.empty() && session.ideals.empty())
        return session;  // empty file is a valid no-op session
    return session;
}

namespace {

json fit_to_json(const FitReport& fit) {
    json j;
    j["verdict"] = verdict_name(fit.verdict);
    j["univariate"] = fit.univariate;
    j["max_degree"] = fit.max_degree;
    j["onset"] = {fit.onset.first, fit.onset.second};
    j["residual_cells"] = fit.residual_cells;
    j["attempts"] = fit.attempts;
    if (fit.poly) {
        json coeffs = json::array();
        for (std::size_t a = 0; a < fit.poly->coeffs.size(); ++a)
            for (std::size_t b = 0; b < fit.poly->coeffs[a].size(); ++b)
                if (fit.poly->coeffs[a][b] != 0)
                    coeffs.push_back({{"a", a}, {"b", b}, {"value", fit.poly->coeffs[a][b]}});
        j["binomial_coefficients"] = coeffs;
        json mono = json::array();
        for (const auto& [key, frac] : fit.poly->monomial_basis())
            mono.push_back({{"n_exp", key.first},
                            {"m_exp", key.second},
                            {"numerator", frac.num},
                            {"denominator", frac.den}});
        j["monomial_coefficients"] = mono;
        j["total_degree"] = fit.poly->total_degree();
        j["binomial_form"] = fit.poly->str();
        j["monomial_form"] = fit.poly->str_monomial();
    }
    if (fit.region_evidence) {
        auto block = [](const RegionFit& r) {
            return json{{"n_lo", r.block.n_lo},
                        {"n_hi", r.block.n_hi},
                        {"m_lo", r.block.m_lo},
                        {"m_hi", r.block.m_hi},
                        {"monomial_form", r.poly.str_monomial()}};
        };
        j["region_evidence"] = {block(fit.region_evidence->first),
                                block(fit.region_evidence->second)};
    }
    return j;
}

json report_to_json(const TheoremReport& rep) {
    json j;
    j["id"] = rep.id;
    j["fixture"] = rep.fixture;
    json hyps = json::array();
    for (const auto& [name, ok] : rep.hypotheses) hyps.push_back({{"name", name}, {"holds", ok}});
    j["hypotheses"] = hyps;
    if (rep.prediction) j["prediction"] = *rep.prediction;
    if (!rep.criteria.empty()) {
        json crits = json::array();
        for (const auto& c : rep.criteria) {
            json gens = json::array();
            for (const auto& [g, in] : c.generator_membership)
                gens.push_back({{"generator", g}, {"in_radical", in}});
            crits.push_back({{"slot", c.slot},
                             {"annihilator", c.annihilator},
                             {"generators", gens},
                             {"contained", c.contained}});
        }
        j["criteria"] = crits;
    }
    if (rep.fit) j["fit"] = fit_to_json(*rep.fit);
    if (rep.fit_secondary) j["fit_second_form"] = fit_to_json(*rep.fit_secondary);
    if (rep.table_csv) j["table_csv"] = *rep.table_csv;
    if (rep.secondary_csv) j["second_form_csv"] = *rep.secondary_csv;
    if (rep.residual_csv) {
        j["residual_csv"] = *rep.residual_csv;
        j["residual_nonzero"] = rep.residual_nonzero;
        j["onset"] = rep.onset;
    }
    j["notes"] = rep.notes;
    j["conclusion"] = conclusion_name(rep.conclusion);
    j["narrative"] = explain(rep);
    return j;
}

struct TaskContext {
    const Session& session;
    const RunOptions& options;
    const SessionTask& task;

    std::string param(const std::string& key, const std::string& fallback) const {
        auto it = task.params.find(key);
        return it == task.params.end() ? fallback : it->second;
    }
    bool has(const std::string& key) const { return task.params.count(key) > 0; }
    int int_param(const std::string& key, int fallback) const {
        auto it = task.params.find(key);
        if (it == task.params.end()) return fallback;
        try {
            return std::stoi(it->second);
        } catch (...) {
            throw SessionError("bad integer for '" + key + "'", task.line, 1);
        }
    }
    std::pair<int, int> range_param(const std::string& key, std::pair<int, int> fallback) const {
        auto it = task.params.find(key);
        if (it == task.params.end()) return fallback;
        auto dots = it->second.find("..");
        try {
            if (dots == std::string::npos) {
                int v = std::stoi(it->second);
                return {v, v};
            }
            return {std::stoi(it->second.substr(0, dots)), std::stoi(it->second.substr(dots + 2))};
        } catch (...) {
            throw SessionError("bad range for '" + key + "' (use lo..hi)", task.line, 1);
        }
    }
    const FPModule& module_param(const std::string& key) const {
        auto it = task.params.find(key);
        if (it == task.params.end())
            throw SessionError("task needs a module parameter '" + key + "'", task.line, 1);
        const FPModule* m = session.find_module(it->second);
        if (!m) throw SessionError("undefined module '" + it->second + "'", task.line, 1);
        return *m;
    }
    const Ideal& ideal_param(const std::string& key) const {
        auto it = task.params.find(key);
        if (it == task.params.end())
            throw SessionError("task needs an ideal parameter '" + key + "'", task.line, 1);
        const Ideal* v = session.find_ideal(it->second);
        if (!v) throw SessionError("undefined ideal '" + it->second + "'", task.line, 1);
        return *v;
    }
    int slot() const {
        int i = int_param("i", -1);
        if (i < 0) throw SessionError("task needs i=<nonnegative>", task.line, 1);
        return i;
    }
    GridRange grid(int def_hi) const {
        auto [nl, nh] = range_param("n", {1, def_hi});
        auto [ml, mh] = range_param("m", {1, def_hi});
        if (nl < 0 || ml < 0 || nh < nl || mh < ml)
            throw SessionError("bad grid ranges", task.line, 1);
        return GridRange{nl, nh, ml, mh};
    }
    Budgets budgets() const {
        Budgets b;
        b.threads = options.threads;
        int budget = int_param("budget", options.budget.value_or(-1));
        if (budget >= 0) {
            b.prop5_budget = budget;
            b.stabilization_budget = budget;
        }
        int cap = int_param("maxdeg", options.max_degree.value_or(-1));
        if (cap >= 0) b.max_degree = cap;
        return b;
    }
};

void write_file(const std::string& dir, const std::string& name, const std::string& contents) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir + "/" + name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + dir + "/" + name);
    out << contents;
}

// returns true when the task produced a REFUTED conclusion
bool execute_task(const TaskContext& ctx, int task_index) {
    const std::string out_name = ctx.param("out", ctx.task.kind + std::to_string(task_index));
    const std::string& dir = ctx.options.out_dir;
    bool refuted = false;

    auto emit_report = [&](const TheoremReport& rep) {
        write_file(dir, out_name + ".json", report_to_json(rep).dump(2) + "\n");
        write_file(dir, out_name + ".txt", explain(rep));
        if (rep.conclusion == Conclusion::REFUTED) refuted = true;
    };

    if (ctx.task.kind == "sample") {
        SampleTable t = sample_grid(ctx.slot(), ctx.module_param("M"), ctx.module_param("N"),
                                    ctx.ideal_param("I"), ctx.ideal_param("J"), ctx.grid(8),
                                    ctx.options.threads);
        write_file(dir, out_name + ".csv", t.csv());
    } else if (ctx.task.kind == "diagonal") {
        auto [nl, nh] = ctx.range_param("n", {1, 8});
        auto diag = sample_diagonal(ctx.slot(), ctx.module_param("M"), ctx.module_param("N"),
                                    ctx.ideal_param("I"), nl, nh, ctx.options.threads);
        write_file(dir, out_name + ".csv", diagonal_csv(diag, nl));
    } else if (ctx.task.kind == "mixed") {
        SampleTable t = sample_mixed(ctx.slot(), ctx.module_param("M"), ctx.module_param("N"),
                                     ctx.ideal_param("I"), ctx.ideal_param("J"), ctx.grid(8),
                                     ctx.options.threads);
        write_file(dir, out_name + ".csv", t.csv());
    } else if (ctx.task.kind == "fit") {
        const FPModule& M = ctx.module_param("M");
        const FPModule& N = ctx.module_param("N");
        const Ideal& I = ctx.ideal_param("I");
        const Ideal& J = ctx.ideal_param("J");
        SampleTable t =
            sample_grid(ctx.slot(), M, N, I, J, ctx.grid(8), ctx.options.threads);
        Budgets b = ctx.budgets();
        int cap = b.max_degree.value_or(
            std::max(0, spread_on_module(I, M) + spread_on_module(J, N) - 2));
        FitReport fit = fit_bivariate(t, cap, default_onsets());
        write_file(dir, out_name + ".csv", t.csv());
        json j = fit_to_json(fit);
        j["narrative"] = fit.str();
        write_file(dir, out_name + ".json", j.dump(2) + "\n");
        write_file(dir, out_name + ".txt", fit.str());
    } else if (ctx.task.kind == "prop5") {
        emit_report(check_prop5(ctx.slot(), ctx.ideal_param("I"), ctx.module_param("M"),
                                ctx.module_param("N"), ctx.budgets()));
    } else if (ctx.task.kind == "theorem6") {
        emit_report(check_theorem6(ctx.slot(), ctx.ideal_param("I"), ctx.ideal_param("J"),
                                   ctx.module_param("M"), ctx.module_param("N"), ctx.grid(8),
                                   ctx.budgets()));
    } else if (ctx.task.kind == "corollary7") {
        auto [nl, nh] = ctx.range_param("n", {1, 8});
        emit_report(check_corollary7(ctx.slot(), ctx.ideal_param("I"), ctx.module_param("M"),
                                     ctx.module_param("N"), nl, nh, ctx.budgets()));
    } else if (ctx.task.kind == "corollary8") {
        emit_report(check_corollary8(ctx.slot(), ctx.ideal_param("I"), ctx.ideal_param("J"),
                                     ctx.module_param("M"), ctx.module_param("N"), ctx.grid(8),
                                     ctx.budgets()));
    } else if (ctx.task.kind == "theorem9") {
        emit_report(check_theorem9(ctx.slot(), ctx.ideal_param("I"), ctx.ideal_param("J"),
                                   ctx.module_param("M"), ctx.module_param("N"), ctx.grid(6),
                                   ctx.budgets()));
    } else if (ctx.task.kind == "prop10") {
        emit_report(run_prop10(ctx.slot(), ctx.ideal_param("I"), ctx.ideal_param("J"),
                               ctx.module_param("M"), ctx.module_param("N"), ctx.grid(8),
                               ctx.budgets()));
    } else if (ctx.task.kind == "remark") {
        std::int64_t p = ctx.session.ring ? ctx.session.ring->field().characteristic()
                                          : ctx.options.characteristic.value_or(32003);
        auto reports = remark_fixtures(p, ctx.budgets());
        json arr = json::array();
        std::string text;
        for (const auto& rep : reports) {
            arr.push_back(report_to_json(rep));
            text += explain(rep) + "\n";
            if (rep.conclusion == Conclusion::REFUTED) refuted = true;
        }
        write_file(dir, out_name + ".json", arr.dump(2) + "\n");
        write_file(dir, out_name + ".txt", text);
    }
    return refuted;
}

}  // namespace

int run_session_file(const std::string& path, const RunOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << path << ": cannot open session file\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    Session session;
    try {
        session = parse_session(buf.str(), options);
    } catch (const SessionError& e) {
        std::cerr << path << ":" << e.line << ":" << e.column << ": " << e.what() << "\n";
        return 2;
    }

    bool any_error = false;
    bool any_refuted = false;
    for (std::size_t t = 0; t < session.tasks.size(); ++t) {
        TaskContext ctx{session, options, session.tasks[t]};
        try {
            if (execute_task(ctx, static_cast<int>(t))) any_refuted = true;
        } catch (const SessionError& e) {
            std::cerr << path << ":" << e.line << ":" << e.column << ": " << e.what() << "\n";
            any_error = true;
        } catch (const std::exception& e) {
            std::cerr << path << ": task " << session.tasks[t].kind << " (line "
                      << session.tasks[t].line << ") failed: " << e.what() << "\n";
            any_error = true;
        }
    }
    if (any_error) return 1;
    if (any_refuted) return 3;
    return 0;
}

std::string explain_report_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j = json::parse(in);
    std::string out;
    auto render = [&out](const json& obj) {
        if (obj.contains("narrative"))
            out += obj["narrative"].get<std::string>();
        else
            out += obj.dump(2);
        out += "\n";
    };
    if (j.is_array())
        for (const auto& obj : j) render(obj);
    else
        render(j);
    return out;
}

}  // namespace torhilb
