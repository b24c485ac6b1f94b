#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace
{

struct Result
{
  int code{ -1 };
  std::string out;
};

Result run( const std::string& args )
{
  const std::string command = std::string( MONOSENS_CLI_PATH ) + " " + args + " 2>/dev/null";
  Result result;
  FILE* pipe = popen( command.c_str(), "r" );
  if ( pipe == nullptr )
  {
    return result;
  }
  std::array<char, 4096> buffer{};
  std::size_t read = 0;
  while ( ( read = std::fread( buffer.data(), 1, buffer.size(), pipe ) ) > 0 )
  {
    result.out.append( buffer.data(), read );
  }
  const int status = pclose( pipe );
  result.code = WIFEXITED( status ) ? WEXITSTATUS( status ) : -1;
  return result;
}

} // namespace

TEST( Cli, AnalyzeMajority )
{
  const auto r = run( "analyze --n 3 --hex e8" );
  ASSERT_EQ( r.code, 0 );
  const auto json = nlohmann::json::parse( r.out );
  EXPECT_TRUE( json["monotone"].get<bool>() );
  EXPECT_EQ( json["minimal_ones"], nlohmann::json( { 3, 5, 6 } ) );
  EXPECT_DOUBLE_EQ( json["average_sensitivity"]["float"].get<double>(), 1.5 );
}

TEST( Cli, NonMonotoneIsNotAnError )
{
  const auto r = run( "analyze --n 2 --hex 6" );
  ASSERT_EQ( r.code, 0 );
  const auto json = nlohmann::json::parse( r.out );
  EXPECT_FALSE( json["monotone"].get<bool>() );
  EXPECT_DOUBLE_EQ( json["average_sensitivity"]["float"].get<double>(), 2.0 );
}

TEST( Cli, InvalidInputExitsWithTwo )
{
  EXPECT_EQ( run( "analyze --n 2 --hex zz" ).code, 2 );
  EXPECT_EQ( run( "analyze --n 2 --hex fff" ).code, 2 );
  EXPECT_EQ( run( "curve --min 5 --max 4" ).code, 2 );
  EXPECT_EQ( run( "curve --min 2 --max 401" ).code, 2 );
  EXPECT_EQ( run( "verify --n 7 --mode exact" ).code, 2 );
  EXPECT_EQ( run( "verify --n 4 --mode bogus" ).code, 2 );
  EXPECT_EQ( run( "" ).code, 2 );
}

TEST( Cli, HelpSucceeds )
{
  EXPECT_EQ( run( "--help" ).code, 0 );
}

TEST( Cli, CurveAndVerify )
{
  const auto curve = run( "curve --min 4 --max 4" );
  ASSERT_EQ( curve.code, 0 );
  EXPECT_EQ( curve.out, "n,parity,s_hat,s_hat_1,s_hat_2,sqrt_2n_over_pi\n4,even,1.12500000000,,,1.59576912161\n" );

  const auto verify = run( "verify --n 3 --mode exact --format json" );
  ASSERT_EQ( verify.code, 0 );
  EXPECT_EQ( nlohmann::json::parse( verify.out )["empirical_mean_exact"], "39/40" );

  const auto sample = run( "verify --n 4 --mode sample --samples 50 --seed 3" );
  EXPECT_EQ( sample.code, 0 );
}
