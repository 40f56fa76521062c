#include "surreal/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace surreal;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string line(std::vector<std::string> args) {
    auto r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    if (!r.out.empty() && r.out.back() == '\n')
        r.out.pop_back();
    return r.out;
}

} // namespace

TEST(Cli, Examples) {
    EXPECT_EQ(line({"sep", "+", "+-+"}), "+ -");
    EXPECT_EQ(line({"separate", "--left", "chain(0;+)", "--right", "chain(+^w;-)"}), "+^w -^w");
    EXPECT_EQ(line({"cmp", "+^w -", "+^w"}), "<");
}

TEST(Cli, Commands) {
    EXPECT_EQ(line({"cmp", "-", "+"}), "<");
    EXPECT_EQ(line({"cmp", "-+", "-+"}), "=");
    EXPECT_EQ(line({"len", "+^w -^3"}), "w+3");
    EXPECT_EQ(line({"restrict", "+^w -^3", "w+1"}), "+^w -");
    EXPECT_EQ(line({"at", "+^w -^3", "w+2"}), "-");
    EXPECT_EQ(line({"at", "+^w", "w"}), "undefined");
    EXPECT_EQ(line({"sup", "chain(0;+)"}), "+^w");
    EXPECT_EQ(line({"inf", "{+}"}), "+ -");
    EXPECT_EQ(line({"check", "+^w -^w", "--left", "chain(0;+)", "--right", "chain(+^w;-)"}),
              "true");
    EXPECT_EQ(line({"check", "+^w", "--left=chain(0;+)", "--right=chain(+^w;-)"}), "false");
    EXPECT_EQ(line({"witness", "+^w"}), "{chain(0;+)}");
    EXPECT_EQ(line({"witness", "++"}), "{+}");
    EXPECT_EQ(line({"ord", "add", "w+1", "w"}), "w*2");
    EXPECT_EQ(line({"ord", "sub", "2", "w"}), "w");
    EXPECT_EQ(line({"ord", "cmp", "w^2", "w*5+4"}), ">");
    EXPECT_EQ(line({"oracle", "bruteforce", "--left", "{+}", "--right", "{++}", "--bound", "4"}),
              "+^2 -");
    EXPECT_EQ(line({"separate", "--left", "{+}", "--right", "{++}", "--method", "endpoint"}),
              "+^2 -");
}

TEST(Cli, MethodsAgree) {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"{-}", "{+}"}, {"{+}", "{++}"}, {"{--}", "{-}"}, {"{-+, +--}", "{+-+, ++}"}, {"{}", "{}"}};
    for (const auto& [l, r] : cases) {
        const auto base = line({"separate", "--left", l, "--right", r});
        for (const auto* method : {"sep", "hat", "brute"})
            EXPECT_EQ(line({"separate", "--left", l, "--right", r, "--method", method}), base)
                << l << " " << r << " " << method;
    }
}

TEST(Cli, OutputsReparse) {
    EXPECT_NO_THROW(parse_surreal(line({"sep", "+^(w+1) -", "+^(w+1) - +"})));
    EXPECT_NO_THROW(parse_set(line({"witness", "+^w -^3 +^w"})));
    EXPECT_NO_THROW(parse_ordinal(line({"len", "+^(w^2*2+w) -^7"})));
    EXPECT_EQ(parse_surreal(line({"restrict", "+^(w*2+5) -", "w*2+3"})), parse_surreal("+^(w*2+3)"));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"witness", "+-"}).code, cli::exit_domain);
    EXPECT_EQ(run({"witness", "+^(w^2)"}).code, cli::exit_domain);
    EXPECT_EQ(run({"ord", "sub", "w+1", "w"}).code, cli::exit_domain);
    EXPECT_EQ(run({"separate", "--left", "{+}", "--right", "{-}"}).code, cli::exit_domain);
    EXPECT_EQ(run({"cmp", "+x", "+"}).code, cli::exit_syntax);
    EXPECT_EQ(run({"len", "+^0"}).code, cli::exit_syntax);
    EXPECT_EQ(run({"frobnicate"}).code, cli::exit_syntax);
    EXPECT_EQ(run({"cmp", "+"}).code, cli::exit_syntax);
    EXPECT_EQ(run({"separate", "--left", "{+}"}).code, cli::exit_syntax);
    EXPECT_EQ(run({"separate", "--left", "chain(0;+)", "--right", "{+^w}", "--method", "brute"}).code,
              cli::exit_syntax);
    EXPECT_EQ(run({}).code, cli::exit_syntax);
    EXPECT_EQ(run({"--help"}).code, cli::exit_ok);

    const auto r = run({"witness", "- +^w -"});
    EXPECT_NE(r.err.find("tail of minuses"), std::string::npos) << r.err;
}

TEST(Cli, SetFromFile) {
    const auto path = std::filesystem::temp_directory_path() / "surreal_cli_set.txt";
    {
        std::ofstream f(path);
        f << "# left side\n-\n\nchain(- +;+)  # increasing\n";
    }
    EXPECT_EQ(line({"sup", "@" + path.string()}), "- +^w");
    EXPECT_EQ(run({"sup", "@/nonexistent/set.txt"}).code, cli::exit_syntax);
    std::filesystem::remove(path);
}
