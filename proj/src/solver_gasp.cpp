#include "gasplab/solver_gasp.hpp"

#include <algorithm>
#include <chrono>

namespace gasplab {

auto gtosg_reduce(const TypedInstance & gasp, const MinimalGuess & guess) -> DerivedSGasp
{
    int T = gasp.type_count(), A = gasp.activity_count(), n = gasp.agent_count();
    if (int(guess.size()) != T)
        throw InvalidGuess("guess needs one alternative per type");
    for (int t = 0; t < T; ++t) {
        auto f = guess[t];
        if (f.activity == kVoid ? f.size != 1 : (f.activity < 0 || f.activity >= A || f.size < 1 || f.size > n))
            throw InvalidGuess("guess for type '" + gasp.type(t).id + "' is not an alternative");
        if (gasp.score(t, f) < gasp.void_score(t))
            throw InvalidGuess("guess for type '" + gasp.type(t).id + "' is worse than staying home");
    }

    auto worst = [&](int t) { return gasp.score(t, guess[t]); };

    // (a,i) may be realised only if no type outside a would then want to join a
    auto allowed = [&](int a, int i) {
        for (int t = 0; t < T; ++t)
            if (guess[t].activity != a && gasp.score(t, {a, i + 1}) > worst(t))
                return false;
        return true;
    };

    DerivedSGasp d;
    d.overflow_activity = A;
    d.must_be_nonempty.assign(std::size_t(A) + 1, false);
    for (int a = 0; a < A; ++a)
        for (int t = 0; t < T; ++t)
            if (gasp.score(t, {a, 1}) > worst(t))
                d.must_be_nonempty[a] = true;

    std::vector<int> every_size(n);
    for (int i = 0; i < n; ++i)
        every_size[i] = i + 1;

    std::vector<AgentType> types;
    for (int t = 0; t < T; ++t) {
        auto f = guess[t];
        bool home = f.activity == kVoid;

        std::vector<std::vector<int>> pin(std::size_t(A) + 1);
        if (home)
            pin[A] = every_size;
        else if (allowed(f.activity, f.size))
            pin[f.activity] = {f.size};

        std::vector<std::vector<int>> rest(std::size_t(A) + 1);
        for (int a = 0; a < A; ++a)
            for (int i = 1; i <= n; ++i) {
                auto s = gasp.score(t, {a, i});
                if (! allowed(a, i) || s < worst(t))
                    continue;
                // others of t must not envy a seat at the worst activity
                if (! home && a != f.activity && s < gasp.score(t, {f.activity, f.size + 1}))
                    continue;
                rest[a].push_back(i);
            }
        if (home)
            rest[A] = every_size;

        auto & id = gasp.type(t).id;
        types.push_back(AgentType{id + "#pin", 1, SizeSetPrefs{std::move(pin)}});
        d.origin.push_back(t);
        d.pinned.push_back(true);
        if (gasp.count(t) > 1) {
            types.push_back(AgentType{id + "#rest", gasp.count(t) - 1, SizeSetPrefs{std::move(rest)}});
            d.origin.push_back(t);
            d.pinned.push_back(false);
        }
    }
    auto activities = gasp.activities();
    activities.emplace_back(kOverflowId);
    d.instance = TypedInstance{PreferenceKind::Approval, std::move(activities), std::move(types)};
    return d;
}

auto lift_assignment(const TypedInstance & gasp, const DerivedSGasp & derived, const TypeCountAssignment & y)
    -> TypeCountAssignment
{
    validate_assignment(derived.instance, y);
    TypeCountAssignment x(gasp.type_count(), gasp.activity_count());
    for (int dt = 0; dt < y.types(); ++dt)
        for (int a = 0; a < gasp.activity_count(); ++a)
            x.at(derived.origin[dt], a) += y.at(dt, a);
    return x;
}

auto guess_candidates(const TypedInstance & gasp, int type) -> std::vector<Alternative>
{
    std::vector<Alternative> c{{kVoid, 1}};
    auto floor = gasp.void_score(type);
    for (int a = 0; a < gasp.activity_count(); ++a)
        for (int i = 1; i <= gasp.agent_count(); ++i)
            if (gasp.score(type, {a, i}) >= floor)
                c.push_back({a, i});
    std::stable_sort(c.begin(), c.end(), [&](Alternative p, Alternative q) {
        return gasp.score(type, p) > gasp.score(type, q);
    });
    return c;
}

auto solve_xp_gasp(const TypedInstance & input, const XpGaspOptions & options, const Limits & limits) -> SolveResult
{
    auto start = std::chrono::steady_clock::now();
    auto gasp = lift_to_ranked(input);
    int T = gasp.type_count();
    if (T > options.max_types)
        throw BudgetExceeded("xp-gasp is capped at " + std::to_string(options.max_types) + " types, instance has " +
                             std::to_string(T));

    SolveResult result;
    result.algorithm = "xp-gasp";
    BranchCounter branches{limits};
    std::vector<std::vector<Alternative>> candidates;
    for (int t = 0; t < T; ++t)
        candidates.push_back(guess_candidates(gasp, t));

    MinimalGuess guess(T);
    auto go = [&](auto & self, int t) -> bool {
        if (t == T) {
            branches.tick();
            auto derived = gtosg_reduce(gasp, guess);
            std::vector<bool> all(derived.instance.type_count(), true);
            auto y = find_ir_assignment(derived.instance, all, derived.must_be_nonempty);
            if (! y)
                return false;
            auto x = lift_assignment(gasp, derived, *y);
            auto report = verify_gasp(gasp, x);
            if (! report.stable())
                throw InternalError("xp-gasp produced an unstable assignment: " +
                                    describe(gasp, report.violations.front()));
            result.exists = true;
            result.witness = std::move(x);
            return true;
        }
        for (auto alt : candidates[t]) {
            guess[t] = alt;
            if (self(self, t + 1))
                return true;
        }
        return false;
    };
    go(go, 0);
    result.stats.branches = branches.count();
    result.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace gasplab
