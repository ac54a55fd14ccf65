#include <unionde/benchmarks.hpp>
#include <unionde/campaign.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace unionde {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view s)
{
    std::vector<std::string> out;
    while (!s.empty()) {
        const auto comma = s.find(',');
        const auto item = trim(s.substr(0, comma));
        if (!item.empty())
            out.emplace_back(item);
        if (comma == std::string_view::npos)
            break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

template <typename T>
T parse_value(std::string_view text, std::string_view key)
{
    T v{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw ConfigurationError("invalid value '" + std::string(text) + "' for key '" + std::string(key) + "'");
    return v;
}

void fnv_bytes(std::uint64_t& h, const void* data, std::size_t n)
{
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t k = 0; k < n; ++k) {
        h ^= p[k];
        h *= 0x100000001b3ULL;
    }
}

void fnv_u64(std::uint64_t& h, std::uint64_t v)
{
    unsigned char le[8];
    for (int k = 0; k < 8; ++k)
        le[k] = static_cast<unsigned char>(v >> (8 * k));
    fnv_bytes(h, le, 8);
}

void fnv_str(std::uint64_t& h, std::string_view s)
{
    fnv_u64(h, s.size());
    fnv_bytes(h, s.data(), s.size());
}

std::string format_mean(double v)
{
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

bool is_shifted(std::string_view name)
{
    return name.starts_with("shifted_");
}

} // namespace

void CampaignConfig::validate() const
{
    if (strategies.empty())
        throw ConfigurationError("no strategies selected");
    if (functions.empty())
        throw ConfigurationError("no functions selected");
    for (const auto& s : strategies)
        parse_strategy(s);
    for (const auto& f : functions)
        bench::make_function(f, 1);
    if (runs < 1)
        throw ConfigurationError("runs must be at least 1");
    if (!(tie_tol >= 0.0))
        throw ConfigurationError("tie tolerance must be non-negative");
    parse_param_policy(param_policy);
    for (const auto& s : strategies) {
        RunConfig rc;
        rc.np = np;
        rc.dim = dim;
        rc.max_evals = budget();
        rc.strategy = parse_strategy(s);
        rc.validate();
    }
}

void apply_config_text(CampaignConfig& cfg, std::istream& in, std::string_view source)
{
    bool strategies_seen = false;
    bool functions_seen = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos)
            view = view.substr(0, hash);
        view = trim(view);
        if (view.empty())
            continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw ConfigurationError(std::string(source) + ":" + std::to_string(line_no) + ": expected key = value");
        const std::string key(trim(view.substr(0, eq)));
        const std::string_view value = trim(view.substr(eq + 1));

        if (key == "strategies" || key == "strategy") {
            if (!strategies_seen)
                cfg.strategies.clear();
            strategies_seen = true;
            for (auto& s : split_list(value))
                cfg.strategies.push_back(std::move(s));
        } else if (key == "functions" || key == "function") {
            if (!functions_seen)
                cfg.functions.clear();
            functions_seen = true;
            for (auto& s : split_list(value))
                cfg.functions.push_back(std::move(s));
        } else if (key == "runs") {
            cfg.runs = parse_value<std::size_t>(value, key);
        } else if (key == "np") {
            cfg.np = parse_value<std::size_t>(value, key);
        } else if (key == "dim") {
            cfg.dim = parse_value<std::size_t>(value, key);
        } else if (key == "max-evals") {
            cfg.max_evals = parse_value<std::size_t>(value, key);
        } else if (key == "seed") {
            cfg.base_seed = parse_value<std::uint64_t>(value, key);
        } else if (key == "jobs") {
            cfg.jobs = parse_value<std::size_t>(value, key);
        } else if (key == "out") {
            cfg.output = std::string(value);
        } else if (key == "tie-tol") {
            cfg.tie_tol = parse_value<double>(value, key);
        } else if (key == "param-policy") {
            cfg.param_policy = std::string(value);
        } else if (key == "target-error") {
            cfg.target_error = parse_value<double>(value, key);
        } else if (key == "shift-file") {
            cfg.shift_file = std::filesystem::path(std::string(value));
        } else {
            throw ConfigurationError(std::string(source) + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
}

CampaignConfig load_config_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigurationError("cannot open config file '" + path.string() + "'");
    CampaignConfig cfg;
    apply_config_text(cfg, in, path.string());
    return cfg;
}

std::uint64_t run_seed(std::uint64_t base_seed, std::string_view strategy, std::string_view function,
    std::size_t run_index)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    fnv_u64(h, base_seed);
    fnv_str(h, strategy);
    fnv_str(h, function);
    fnv_u64(h, run_index);
    return mix64(h);
}

std::vector<RunRecord> run_campaign(const CampaignConfig& cfg, std::ostream* progress, const RunCallback& on_run)
{
    cfg.validate();
    const ParamPolicy policy = parse_param_policy(cfg.param_policy);

    std::optional<RealVector> shift;
    if (cfg.shift_file)
        shift = bench::load_shift_file(*cfg.shift_file, cfg.dim);

    std::vector<std::string> functions = cfg.functions;
    std::vector<std::string> strategies = cfg.strategies;
    std::sort(functions.begin(), functions.end());
    functions.erase(std::unique(functions.begin(), functions.end()), functions.end());
    std::sort(strategies.begin(), strategies.end());
    strategies.erase(std::unique(strategies.begin(), strategies.end()), strategies.end());

    std::vector<ObjectiveFunction> objectives;
    for (const auto& f : functions)
        objectives.push_back(bench::make_function(f, cfg.dim, is_shifted(f) ? shift : std::nullopt));

    struct Job {
        std::size_t function;
        std::size_t strategy;
        std::size_t run;
    };
    std::vector<Job> jobs;
    for (std::size_t f = 0; f < functions.size(); ++f)
        for (std::size_t s = 0; s < strategies.size(); ++s)
            for (std::size_t r = 0; r < cfg.runs; ++r)
                jobs.push_back({f, s, r});

    std::vector<RunRecord> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    std::size_t done = 0;
    std::mutex report_mutex;
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= jobs.size())
                return;
            {
                std::lock_guard lock(report_mutex);
                if (failure)
                    return;
            }
            const Job& job = jobs[k];
            try {
                RunConfig rc;
                rc.np = cfg.np;
                rc.dim = cfg.dim;
                rc.max_evals = cfg.budget();
                rc.strategy = parse_strategy(strategies[job.strategy]);
                rc.param_policy = policy;
                rc.objective_name = functions[job.function];
                rc.target_error = cfg.target_error;
                rc.seed = run_seed(cfg.base_seed, strategies[job.strategy], functions[job.function], job.run);

                const RunResult result = run(rc, objectives[job.function]);
                RunRecord rec{functions[job.function], strategies[job.strategy], job.run, rc.seed, result.best_error,
                    result.evals_used};

                std::lock_guard lock(report_mutex);
                rows[k] = rec;
                ++done;
                if (on_run)
                    on_run(rec, result);
                if (progress)
                    *progress << "[" << done << "/" << jobs.size() << "] " << rec.function << " " << rec.strategy
                              << " run " << rec.run_index << " error " << format_real(rec.final_error) << "\n";
            } catch (...) {
                std::lock_guard lock(report_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };

    std::size_t threads = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, jobs.size());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

std::string format_real(double value)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc())
        throw std::runtime_error("format_real: conversion failed");
    return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& rows)
{
    out << csv_header << "\n";
    for (const auto& r : rows)
        out << r.function << "," << r.strategy << "," << r.run_index << "," << r.seed << ","
            << format_real(r.final_error) << "," << r.evals_used << "\n";
}

std::vector<RunRecord> read_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || trim(line) != csv_header)
        throw std::runtime_error("CSV line 1: expected header '" + std::string(csv_header) + "'");

    std::vector<RunRecord> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view view = trim(line);
        if (view.empty())
            continue;
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        for (;;) {
            const auto comma = view.find(',', start);
            fields.push_back(view.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        const std::string where = "CSV line " + std::to_string(line_no) + ": ";
        if (fields.size() != 6)
            throw std::runtime_error(where + "expected 6 fields, found " + std::to_string(fields.size()));
        if (fields[0].empty() || fields[1].empty())
            throw std::runtime_error(where + "empty function or strategy");
        try {
            RunRecord r;
            r.function = std::string(fields[0]);
            r.strategy = std::string(fields[1]);
            r.run_index = parse_value<std::size_t>(fields[2], "run_index");
            r.seed = parse_value<std::uint64_t>(fields[3], "seed");
            r.final_error = parse_value<double>(fields[4], "final_error");
            r.evals_used = parse_value<std::size_t>(fields[5], "evals_used");
            if (!std::isfinite(r.final_error))
                throw ConfigurationError("non-finite final_error");
            rows.push_back(std::move(r));
        } catch (const ConfigurationError& e) {
            throw std::runtime_error(where + e.what());
        }
    }
    return rows;
}

std::optional<std::size_t> SummaryTable::strategy_index(std::string_view name) const
{
    for (std::size_t s = 0; s < strategies.size(); ++s)
        if (strategies[s] == name)
            return s;
    return std::nullopt;
}

SummaryTable summarize(const std::vector<RunRecord>& rows)
{
    SummaryTable t;
    auto index_of = [](std::vector<std::string>& names, const std::string& n) {
        auto it = std::find(names.begin(), names.end(), n);
        if (it != names.end())
            return static_cast<std::size_t>(it - names.begin());
        names.push_back(n);
        return names.size() - 1;
    };
    std::map<std::pair<std::size_t, std::size_t>, std::vector<double>> cells;
    for (const auto& r : rows) {
        const auto f = index_of(t.functions, r.function);
        const auto s = index_of(t.strategies, r.strategy);
        cells[{f, s}].push_back(r.final_error);
    }
    t.means.assign(t.functions.size(), std::vector<std::optional<double>>(t.strategies.size()));
    for (const auto& [key, errors] : cells)
        t.means[key.first][key.second] = stats::mean_error(errors);
    return t;
}

void print_table(std::ostream& out, const SummaryTable& table, std::string_view reference, double tie_tol)
{
    const auto ref = table.strategy_index(reference);
    if (!ref)
        throw ConfigurationError("reference strategy '" + std::string(reference) + "' is not in the results");

    const std::size_t ns = table.strategies.size();
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{"Fun."};
    for (const auto& s : table.strategies)
        header.push_back(s + " mean");
    grid.push_back(header);

    for (std::size_t f = 0; f < table.functions.size(); ++f) {
        std::optional<double> best;
        for (const auto& m : table.means[f])
            if (m && (!best || *m < *best))
                best = *m;
        std::vector<std::string> row{table.functions[f]};
        for (const auto& m : table.means[f]) {
            if (!m)
                row.emplace_back("-");
            else
                row.push_back(format_mean(*m) + (*m - *best <= tie_tol ? "*" : ""));
        }
        grid.push_back(std::move(row));
    }

    std::vector<std::string> footer{""};
    for (std::size_t s = 0; s < ns; ++s) {
        if (s == *ref) {
            footer.emplace_back("");
            continue;
        }
        std::vector<double> other;
        std::vector<double> mine;
        for (std::size_t f = 0; f < table.functions.size(); ++f)
            if (table.means[f][s] && table.means[f][*ref]) {
                other.push_back(*table.means[f][s]);
                mine.push_back(*table.means[f][*ref]);
            }
        const auto wtl = stats::win_tie_lose(other, mine, tie_tol);
        footer.push_back("Win: " + std::to_string(wtl.win) + " lose: " + std::to_string(wtl.lose) +
                         " tie: " + std::to_string(wtl.tie));
    }
    grid.push_back(std::move(footer));

    std::vector<std::size_t> width(ns + 1, 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                line += "  ";
            line += row[c];
            if (c + 1 < row.size())
                line.append(width[c] - row[c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << "\n";
    }
    out << "reference: " << reference << " (* marks the best mean per row, tie tolerance " << format_real(tie_tol)
        << ")\n";
}

Comparison compare_strategies(const std::vector<RunRecord>& rows, std::string_view strategy_a,
    std::string_view strategy_b, double alpha)
{
    const auto table = summarize(rows);
    const auto a = table.strategy_index(strategy_a);
    const auto b = table.strategy_index(strategy_b);
    if (!a)
        throw ConfigurationError("strategy '" + std::string(strategy_a) + "' is not in the results");
    if (!b)
        throw ConfigurationError("strategy '" + std::string(strategy_b) + "' is not in the results");

    Comparison cmp;
    cmp.strategy_a = std::string(strategy_a);
    cmp.strategy_b = std::string(strategy_b);
    stats::PairedSample sample;
    for (std::size_t f = 0; f < table.functions.size(); ++f)
        if (table.means[f][*a] && table.means[f][*b]) {
            cmp.functions.push_back(table.functions[f]);
            sample.a.push_back(*table.means[f][*a]);
            sample.b.push_back(*table.means[f][*b]);
        }
    if (cmp.functions.empty())
        throw ConfigurationError("strategies '" + cmp.strategy_a + "' and '" + cmp.strategy_b +
                                 "' share no functions");
    cmp.result = stats::wilcoxon_signed_rank(sample, alpha);
    return cmp;
}

void print_comparison(std::ostream& out, const Comparison& cmp)
{
    const auto& r = cmp.result;
    const std::string name = cmp.strategy_a + " Vs. " + cmp.strategy_b;
    const std::size_t w = std::max<std::size_t>(name.size(), 9);
    auto num = [](double v) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(2) << v;
        return os.str();
    };
    std::ostringstream p;
    p << std::setprecision(4) << r.p_value;

    out << std::left << std::setw(static_cast<int>(w)) << "Algorithm" << std::right;
    for (const char* h : {"MR-", "MR+", "SR-", "SR+", "P-value"})
        out << "  " << std::setw(9) << h;
    out << "  Difference\n";
    out << std::left << std::setw(static_cast<int>(w)) << name << std::right << "  " << std::setw(9)
        << num(r.mr_minus) << "  " << std::setw(9) << num(r.mr_plus) << "  " << std::setw(9) << num(r.sr_minus)
        << "  " << std::setw(9) << num(r.sr_plus) << "  " << std::setw(9) << p.str() << "  "
        << stats::to_symbol(r.verdict) << "\n";
    out << "functions: " << cmp.functions.size() << ", non-zero differences: " << r.n_effective << ", p-value "
        << (r.exact ? "exact" : "normal approximation");
    if (r.underpowered)
        out << ", underpowered (fewer than " << stats::min_effective_pairs << " non-zero differences)";
    out << "\n";
}

void print_listing(std::ostream& out, std::size_t dim)
{
    out << "strategies:\n";
    for (const auto& s : strategy_names())
        out << "  " << s << "\n";
    out << "functions (dimension " << dim << "):\n";
    for (const auto& name : bench::function_names()) {
        const auto f = bench::make_function(name, dim);
        out << "  " << std::left << std::setw(18) << name << std::right << " bounds [" << f.bounds().lower(0) << ", "
            << f.bounds().upper(0) << "]^" << dim << "  optimum " << f.optimum_value().value_or(0.0) << "\n";
    }
}

} // namespace unionde
