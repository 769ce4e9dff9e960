#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "circlelang/io.hpp"
#include "circlelang/render.hpp"

using namespace circlelang;
using Json = nlohmann::json;

namespace {

std::string cli_path() {
#ifdef CIRCLELANG_CLI_PATH
    return CIRCLELANG_CLI_PATH;
#else
    const char* env = std::getenv("CIRCLELANG_CLI");
    return env ? env : "";
#endif
}

struct CliResult {
    int exit_code;
    std::string stdout_text;
};

CliResult run_cli(const std::string& args) {
    const std::string command = cli_path() + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "circlelang_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("render_circle_svg draws one shape per letter") {
    const std::string svg = render_circle_svg("WE BURDEN", english_partition());
    // W, E, E, N circled; B, U, R, D boxed.
    std::size_t circles = 0, rects = 0;
    for (std::size_t pos = svg.find("<circle"); pos != std::string::npos;
         pos = svg.find("<circle", pos + 1))
        ++circles;
    for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
         pos = svg.find("<rect", pos + 1))
        ++rects;
    CHECK(circles == 4);
    CHECK(rects == 4);

    const std::string single = render_circle_svg("A", english_partition());
    CHECK(single.find(">A</text>") != std::string::npos);

    CHECK_THROWS_AS(
        render_circle_svg("ab", build_alphabet({{"A", U"a"}}, /*complete=*/true)),
        UnknownSymbol);
}

TEST_CASE("render_circle_svg is deterministic and annotates eliminations") {
    const EliminationAnnotation annotation{9, 15, Convention::CountK};
    const std::string text = "THAT SOURCE: ADVANCED CLASS RESULTS.";
    const std::string once = render_circle_svg(text, english_partition(), annotation);
    const std::string twice = render_circle_svg(text, english_partition(), annotation);
    CHECK(once == twice);
    // First removal is position 9, labeled "1".
    CHECK(once.find(">1</text>") != std::string::npos);
    // 15 elimination-order labels.
    std::size_t labels = 0;
    for (std::size_t pos = once.find("class=\"ord\""); pos != std::string::npos;
         pos = once.find("class=\"ord\"", pos + 1))
        ++labels;
    CHECK(labels == 15);
}

TEST_CASE("render_circle writes the file") {
    const auto path = temp_dir() / "burden.svg";
    render_circle("WE BURDEN", english_partition(), path.string());
    const std::string contents = read_file(path.string());
    CHECK(contents.rfind("<svg", 0) == 0);
    CHECK_THROWS_AS(render_circle("A", english_partition(), "/nonexistent/x/y.svg"),
                    IoError);
}

TEST_CASE("cli: partition matches the worked example and round-trips") {
    auto [code, out] = run_cli("partition --n 10 --r 3 --k 4 --mode removal");
    CHECK(code == 0);
    const Json j = Json::parse(out);
    CHECK(j["groups"] == Json::parse("[[4,5,8],[3,7,10],[1,2,6,9]]"));
    CHECK(j["mode"] == "removal");
    CHECK(j["trace"]["s"] == 2);
    CHECK(j["trace"]["elimination_order"] ==
          Json::parse("[4,8,12,5,10,3,11,7,6,9,2,1]"));
    // Round-trip through the schema.
    CHECK(Json::parse(j.dump()) == j);
}

TEST_CASE("cli: count reaches the alphabet module") {
    auto [code, out] = run_cli("count --n 5 --r 3 --kind surjective");
    CHECK(code == 0);
    const Json j = Json::parse(out);
    CHECK(j["value"] == "150");

    auto big = run_cli("count --n 64 --r 4 --kind all");
    CHECK(big.exit_code == 0);
    CHECK(Json::parse(big.stdout_text)["value"] ==
          "340282366920938463463374607431768211456");
}

TEST_CASE("cli: josephus and solve-arrangement") {
    auto [code, out] = run_cli("josephus --n 12 --k 4 --count 12");
    CHECK(code == 0);
    CHECK(Json::parse(out)["removed"] == Json::parse("[4,8,12,5,10,3,11,7,6,9,2,1]"));

    auto solved = run_cli("solve-arrangement --first 15 --second 15 --k 9");
    CHECK(solved.exit_code == 0);
    CHECK(Json::parse(solved.stdout_text)["runs"] ==
          Json::parse("[4,5,2,1,3,1,1,2,2,3,1,2,2,1]"));

    auto steps = run_cli("solve-step --runs 2,4,2 --count 4 --k-max 30");
    CHECK(steps.exit_code == 0);
    const Json ks = Json::parse(steps.stdout_text)["k"];
    CHECK(std::find(ks.begin(), ks.end(), Json(6)) != ks.end());

    // Deriving the circle from text gives the same answer.
    auto from_text = run_cli("solve-step --text \"WE BURDEN\" --count 4 --k-max 30");
    CHECK(from_text.exit_code == 0);
    CHECK(Json::parse(from_text.stdout_text)["k"] == ks);

    // No workable step size: exit 1.
    auto none = run_cli("solve-step --runs 1,1 --count 1 --k-max 1");
    CHECK(none.exit_code == 1);
}

TEST_CASE("cli: grl and check-sentence exit codes") {
    auto [code, out] = run_cli("grl --text \"WE BURDEN\"");
    CHECK(code == 0);
    CHECK(Json::parse(out)["pattern"] == Json::parse("[2,4,2]"));

    CHECK(run_cli("check-sentence --text \"WE BURDEN\" --pattern 2,4,2").exit_code == 0);
    CHECK(run_cli("check-sentence --text \"WE BURDEN\" --pattern 2,4,1").exit_code == 1);
    // Usage errors exit 2.
    CHECK(run_cli("check-sentence --pattern 2,4,2").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("cli: find-sentence on files") {
    const auto dir = temp_dir();
    {
        std::ofstream dict(dir / "dict.txt");
        dict << "aa\nac\nab\nc\nca\n";
        std::ofstream grammar(dir / "grammar.txt");
        grammar << "S -> W W W\nW -> \"aa\" | \"ac\" | \"ab\" | \"c\" | \"ca\"\n";
        std::ofstream alphabet(dir / "alphabet.json");
        alphabet << R"({"classes": {"A": ["a", "b"], "B": ["c", "d"]}, "complete": true})";
    }
    const std::string files = " --dictionary " + (dir / "dict.txt").string() +
                              " --grammar " + (dir / "grammar.txt").string() +
                              " --alphabet " + (dir / "alphabet.json").string();
    auto found = run_cli("find-sentence --pattern 2,1,2" + files + " --mode exhaustive");
    CHECK(found.exit_code == 0);
    const Json j = Json::parse(found.stdout_text);
    CHECK(j["sentence"] == Json::parse(R"(["aa","c","aa"])"));
    CHECK(j["spelled"] == "aacaa");
    CHECK(j["t"][0]["letters"] == "aa");
    CHECK(j["t"][1]["class"] == "B");

    // No three-word sentence spells an alternating 1,1,1,1 pattern here.
    auto missing = run_cli("find-sentence --pattern 1,1,1,1" + files);
    CHECK(missing.exit_code == 1);
    CHECK(Json::parse(missing.stdout_text)["solution"].is_null());
}

TEST_CASE("cli: render-circle is byte-for-byte reproducible") {
    const auto dir = temp_dir();
    const std::string out1 = (dir / "a.svg").string();
    const std::string out2 = (dir / "b.svg").string();
    const std::string args = "render-circle --text \"WE BURDEN\" --out ";
    CHECK(run_cli(args + out1).exit_code == 0);
    CHECK(run_cli(args + out2 + " ").exit_code == 0);
    CHECK(read_file(out1) == read_file(out2));

    auto annotated = run_cli(
        "render-circle --text \"THAT SOURCE: ADVANCED CLASS RESULTS.\" --out " +
        (dir / "c.svg").string() + " --annotate-elimination k=9,count=15");
    CHECK(annotated.exit_code == 0);
    CHECK(Json::parse(annotated.stdout_text)["positions"] == 30);
}
