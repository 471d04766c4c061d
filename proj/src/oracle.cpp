#include "gasplab/oracle.hpp"

#include <cmath>

namespace gasplab {

namespace {
    auto search(const TypedInstance & inst, const OracleOptions & options, bool approval) -> OracleResult
    {
        int T = inst.type_count(), A = inst.activity_count();
        OracleResult result;
        TypeCountAssignment x(T, A);
        std::vector<int> left(T);
        for (int t = 0; t < T; ++t)
            left[t] = inst.count(t);

        auto visit = [&]() {
            if (++result.visited > options.max_nodes)
                throw BudgetExceeded("oracle visited more than " + std::to_string(options.max_nodes) + " nodes");
        };

        // the column of activity a, one type at a time
        auto column = [&](auto & self, auto & next, int a, int t, int size) -> bool {
            if (t == T) {
                visit();
                for (int u = 0; u < T; ++u)
                    if (x.at(u, a) > 0 && inst.score(u, {a, size}) < inst.void_score(u))
                        return false;
                return next(next, a + 1);
            }
            for (int c = 0; c <= left[t]; ++c) {
                x.at(t, a) = c;
                left[t] -= c;
                bool stop = self(self, next, a, t + 1, size + c);
                left[t] += c;
                x.at(t, a) = 0;
                if (stop)
                    return true;
            }
            return false;
        };

        auto activity = [&](auto & self, int a) -> bool {
            if (a == A) {
                auto report = approval ? verify_sgasp(inst, x) : verify_gasp(inst, x);
                if (! report.stable())
                    return false;
                result.exists = true;
                result.stable.push_back(x);
                return ! options.collect_all;
            }
            return column(column, self, a, 0, 0);
        };
        activity(activity, 0);
        return result;
    }
}

auto oracle_sgasp(const TypedInstance & inst, const OracleOptions & options) -> OracleResult
{
    if (inst.kind() != PreferenceKind::Approval)
        throw InputError("oracle_sgasp needs approval preferences");
    return search(inst, options, true);
}

auto oracle_gasp(const TypedInstance & inst, const OracleOptions & options) -> OracleResult
{
    return search(inst, options, false);
}

auto oracle_ggasp(const NetworkInstance & net, const OracleOptions & options) -> NetworkOracleResult
{
    int N = net.agent_count(), A = net.base().activity_count();
    double space = std::pow(double(A + 1), double(N));
    if (space > double(options.max_nodes))
        throw BudgetExceeded("oracle_ggasp would try " + std::to_string(space) + " assignments, budget is " +
                             std::to_string(options.max_nodes));
    NetworkOracleResult result;
    AgentAssignment pi(N, kVoid);
    auto go = [&](auto & self, int i) -> bool {
        if (i == N) {
            ++result.visited;
            if (! verify_ggasp(net, pi).stable())
                return false;
            result.exists = true;
            result.stable.push_back(pi);
            return ! options.collect_all;
        }
        for (int a = kVoid; a < A; ++a) {
            pi[i] = a;
            if (self(self, i + 1))
                return true;
        }
        pi[i] = kVoid;
        return false;
    };
    go(go, 0);
    return result;
}

} // namespace gasplab
