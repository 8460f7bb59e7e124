#include "scenariodoc/apidb.hpp"

namespace scenariodoc {
namespace {

// Official Java packages treated as APIs, one record per top-level package family.
constexpr const char* kJdkApis =
    R"jdk([{"links":["https://docs.oracle.com/javase/8/docs/api/"],"methods":{"Class":["forName","getName","newInstance","getDeclaredFields","getSimpleName"],"Integer":["parseInt","valueOf","toString"],"Math":["max","min","abs","round","floor","ceil","random","pow","sqrt"],"Object":["toString","equals","hashCode","getClass"],"String":["valueOf","format","length","substring","split","equals","trim","replace","getBytes","toCharArray","isEmpty","contains","startsWith","endsWith","indexOf","join"],"StringBuilder":["append","toString","length","insert"],"System":["currentTimeMillis","getProperty","exit","arraycopy","nanoTime"]},"modules":["java.lang"],"name":"java.lang","packages":["java.lang","java.lang.reflect"],"types":{"Boolean":"java.lang.Boolean","Byte":"java.lang.Byte","Character":"java.lang.Character","Class":"java.lang.Class","ClassNotFoundException":"java.lang.ClassNotFoundException","CloneNotSupportedException":"java.lang.CloneNotSupportedException","Comparable":"java.lang.Comparable","Constructor":"java.lang.reflect.Constructor","Deprecated":"java.lang.Deprecated","Double":"java.lang.Double","Enum":"java.lang.Enum","Error":"java.lang.Error","Exception":"java.lang.Exception","Field":"java.lang.reflect.Field","Float":"java.lang.Float","FunctionalInterface":"java.lang.FunctionalInterface","IllegalArgumentException":"java.lang.IllegalArgumentException","IllegalStateException":"java.lang.IllegalStateException","Integer":"java.lang.Integer","InterruptedException":"java.lang.InterruptedException","InvocationTargetException":"java.lang.reflect.InvocationTargetException","Iterable":"java.lang.Iterable","Long":"java.lang.Long","Math":"java.lang.Math","Method":"java.lang.reflect.Method","Modifier":"java.lang.reflect.Modifier","NullPointerException":"java.lang.NullPointerException","Number":"java.lang.Number","NumberFormatException":"java.lang.NumberFormatException","Object":"java.lang.Object","Override":"java.lang.Override","ParameterizedType":"java.lang.reflect.ParameterizedType","Runnable":"java.lang.Runnable","RuntimeException":"java.lang.RuntimeException","Short":"java.lang.Short","String":"java.lang.String","StringBuffer":"java.lang.StringBuffer","StringBuilder":"java.lang.StringBuilder","SuppressWarnings":"java.lang.SuppressWarnings","System":"java.lang.System","Thread":"java.lang.Thread","Type":"java.lang.reflect.Type","UnsupportedOperationException":"java.lang.UnsupportedOperationException"}},{"links":["https://docs.oracle.com/javase/8/docs/api/"],"methods":{"ArrayList":["add","get","size","isEmpty","remove","contains","iterator","stream","addAll","clear"],"Arrays":["asList","sort","toString","copyOf","fill","stream"],"Base64":["getEncoder","getDecoder"],"Collections":["sort","emptyList","unmodifiableList","singletonList","reverse"],"Collectors":["toList","toMap","joining","groupingBy","toSet"],"Date":["getTime","toString"],"HashMap":["put","get","keySet","values","entrySet","containsKey","remove","size"],"Iterator":["hasNext","next","remove"],"List":["add","get","size","isEmpty","remove","contains","iterator","stream","addAll","clear","set","toArray","forEach","indexOf"],"Map":["put","get","keySet","values","entrySet","containsKey","remove","size","putAll","getOrDefault","forEach"],"Optional":["of","empty","isPresent","get","orElse","ofNullable"],"Scanner":["nextLine","hasNext","next","nextInt","close","hasNextLine"],"Set":["add","contains","remove","size","iterator"],"Stream":["map","filter","collect","forEach","of"],"UUID":["randomUUID","toString"]},"modules":["java.util"],"name":"java.util","packages":["java.util","java.util.stream","java.util.function","java.util.concurrent","java.util.regex"],"types":{"ArrayDeque":"java.util.ArrayDeque","ArrayList":"java.util.ArrayList","Arrays":"java.util.Arrays","Base64":"java.util.Base64","BiFunction":"java.util.function.BiFunction","Calendar":"java.util.Calendar","Callable":"java.util.concurrent.Callable","Collection":"java.util.Collection","Collections":"java.util.Collections","Collectors)jdk"
    R"jdk(":"java.util.stream.Collectors","Comparator":"java.util.Comparator","CompletableFuture":"java.util.concurrent.CompletableFuture","ConcurrentHashMap":"java.util.concurrent.ConcurrentHashMap","Consumer":"java.util.function.Consumer","Date":"java.util.Date","Deque":"java.util.Deque","Enumeration":"java.util.Enumeration","ExecutorService":"java.util.concurrent.ExecutorService","Executors":"java.util.concurrent.Executors","Function":"java.util.function.Function","Future":"java.util.concurrent.Future","HashMap":"java.util.HashMap","HashSet":"java.util.HashSet","Hashtable":"java.util.Hashtable","IntStream":"java.util.stream.IntStream","Iterator":"java.util.Iterator","LinkedHashMap":"java.util.LinkedHashMap","LinkedHashSet":"java.util.LinkedHashSet","LinkedList":"java.util.LinkedList","List":"java.util.List","Locale":"java.util.Locale","Map":"java.util.Map","Matcher":"java.util.regex.Matcher","NoSuchElementException":"java.util.NoSuchElementException","Objects":"java.util.Objects","Optional":"java.util.Optional","Pattern":"java.util.regex.Pattern","Predicate":"java.util.function.Predicate","Properties":"java.util.Properties","Queue":"java.util.Queue","Random":"java.util.Random","Scanner":"java.util.Scanner","Set":"java.util.Set","Stack":"java.util.Stack","Stream":"java.util.stream.Stream","StringTokenizer":"java.util.StringTokenizer","Supplier":"java.util.function.Supplier","TimeUnit":"java.util.concurrent.TimeUnit","TimeZone":"java.util.TimeZone","TreeMap":"java.util.TreeMap","TreeSet":"java.util.TreeSet","UUID":"java.util.UUID","Vector":"java.util.Vector"}},{"links":["https://docs.oracle.com/javase/8/docs/api/"],"methods":{"BufferedReader":["readLine","close","lines","read"],"BufferedWriter":["write","newLine","close","flush"],"ByteArrayOutputStream":["toByteArray","toString","write"],"File":["exists","getName","getPath","createNewFile","delete","listFiles","getAbsolutePath","mkdirs"],"FileReader":["close","read"],"FileWriter":["write","close","flush"],"IOException":["printStackTrace","getMessage"],"InputStream":["read","close"],"OutputStream":["write","flush","close"],"PrintWriter":["println","print","write","flush","close"],"StringWriter":["toString","write"]},"modules":["java.io"],"name":"java.io","packages":["java.io"],"types":{"BufferedReader":"java.io.BufferedReader","BufferedWriter":"java.io.BufferedWriter","ByteArrayInputStream":"java.io.ByteArrayInputStream","ByteArrayOutputStream":"java.io.ByteArrayOutputStream","Closeable":"java.io.Closeable","DataInputStream":"java.io.DataInputStream","DataOutputStream":"java.io.DataOutputStream","File":"java.io.File","FileInputStream":"java.io.FileInputStream","FileNotFoundException":"java.io.FileNotFoundException","FileOutputStream":"java.io.FileOutputStream","FileReader":"java.io.FileReader","FileWriter":"java.io.FileWriter","IOException":"java.io.IOException","InputStream":"java.io.InputStream","InputStreamReader":"java.io.InputStreamReader","ObjectInputStream":"java.io.ObjectInputStream","ObjectOutputStream":"java.io.ObjectOutputStream","OutputStream":"java.io.OutputStream","OutputStreamWriter":"java.io.OutputStreamWriter","PrintStream":"java.io.PrintStream","PrintWriter":"java.io.PrintWriter","Reader":"java.io.Reader","Serializable":"java.io.Serializable","StringReader":"java.io.StringReader","StringWriter":"java.io.StringWriter","UnsupportedEncodingException":"java.io.UnsupportedEncodingException","Writer":"java.io.Writer"}},{"links":["https://docs.oracle.com/javase/8/docs/api/"],"methods":{"HttpURLConnection":["setRequestMethod","setRequestProperty","getInputStream","getOutputStream","getResponseCode","setDoOutput","connect","disconnect"],"URL":["openConnection","openStream","toURI"],"URLConnection":["getInputStream","setRequestProperty"],"URLDecoder":["decode"],"URLEncoder":["encode"]},"modules":["java.net"],"name":"java.net","packages":["java.net"],"types":{"HttpURLConnection":"java.net.HttpURLConnection","InetAddress":"java.net.InetAddress","MalformedURLException":"java.net.Ma)jdk"
    R"jdk(lformedURLException","ServerSocket":"java.net.ServerSocket","Socket":"java.net.Socket","URI":"java.net.URI","URISyntaxException":"java.net.URISyntaxException","URL":"java.net.URL","URLConnection":"java.net.URLConnection","URLDecoder":"java.net.URLDecoder","URLEncoder":"java.net.URLEncoder"}},{"links":["https://docs.oracle.com/javase/8/docs/api/"],"methods":{"Charset":["forName","defaultCharset"],"Files":["readAllBytes","readAllLines","write","lines","exists","newBufferedReader","newBufferedWriter","createDirectories"],"Path":["toFile","resolve","getFileName"],"Paths":["get"]},"modules":["java.nio"],"name":"java.nio","packages":["java.nio"],"types":{"ByteBuffer":"java.nio.ByteBuffer","Charset":"java.nio.charset.Charset","Files":"java.nio.file.Files","Path":"java.nio.file.Path","Paths":"java.nio.file.Paths","StandardCharsets":"java.nio.charset.StandardCharsets","StandardOpenOption":"java.nio.file.StandardOpenOption"}},{"links":["https://docs.oracle.com/javase/8/docs/api/"],"methods":{"DateTimeFormatter":["ofPattern","format","parse"],"Instant":["now","parse","ofEpochMilli","toEpochMilli"],"LocalDate":["parse","now","of","format"],"LocalDateTime":["parse","now","of","format"]},"modules":["java.time"],"name":"java.time","packages":["java.time"],"types":{"DateTimeFormatter":"java.time.format.DateTimeFormatter","DateTimeParseException":"java.time.format.DateTimeParseException","Duration":"java.time.Duration","Instant":"java.time.Instant","LocalDate":"java.time.LocalDate","LocalDateTime":"java.time.LocalDateTime","LocalTime":"java.time.LocalTime","OffsetDateTime":"java.time.OffsetDateTime","Period":"java.time.Period","ZoneId":"java.time.ZoneId","ZoneOffset":"java.time.ZoneOffset","ZonedDateTime":"java.time.ZonedDateTime"}},{"links":["https://docs.oracle.com/javase/8/docs/api/"],"methods":{"DateFormat":["parse","format"],"SimpleDateFormat":["parse","format","setTimeZone"]},"modules":["java.text"],"name":"java.text","packages":["java.text"],"types":{"DateFormat":"java.text.DateFormat","DecimalFormat":"java.text.DecimalFormat","MessageFormat":"java.text.MessageFormat","NumberFormat":"java.text.NumberFormat","ParseException":"java.text.ParseException","SimpleDateFormat":"java.text.SimpleDateFormat"}},{"links":["https://docs.oracle.com/javase/8/docs/api/"],"methods":{"Connection":["prepareStatement","createStatement","close"],"DriverManager":["getConnection"],"PreparedStatement":["setString","setInt","executeQuery","executeUpdate"],"ResultSet":["next","getString","getInt","getLong"]},"modules":["java.sql"],"name":"java.sql","packages":["java.sql"],"types":{"Connection":"java.sql.Connection","DriverManager":"java.sql.DriverManager","PreparedStatement":"java.sql.PreparedStatement","ResultSet":"java.sql.ResultSet","SQLException":"java.sql.SQLException","Statement":"java.sql.Statement","Timestamp":"java.sql.Timestamp"}},{"links":["https://docs.oracle.com/javase/8/docs/api/"],"methods":{"Client":["target","close"],"ClientBuilder":["newClient","newBuilder"],"Entity":["json","entity"],"Response":["ok","status","build","entity","readEntity","getStatus","serverError"],"WebTarget":["path","request","queryParam"]},"modules":["javax.ws.rs"],"name":"javax.ws.rs","packages":["javax.ws.rs"],"types":{"Client":"javax.ws.rs.client.Client","ClientBuilder":"javax.ws.rs.client.ClientBuilder","Consumes":"javax.ws.rs.Consumes","Context":"javax.ws.rs.core.Context","DELETE":"javax.ws.rs.DELETE","Entity":"javax.ws.rs.client.Entity","FormParam":"javax.ws.rs.FormParam","GET":"javax.ws.rs.GET","HttpHeaders":"javax.ws.rs.core.HttpHeaders","Invocation":"javax.ws.rs.client.Invocation","MediaType":"javax.ws.rs.core.MediaType","POST":"javax.ws.rs.POST","PUT":"javax.ws.rs.PUT","Path":"javax.ws.rs.Path","PathParam":"javax.ws.rs.PathParam","Produces":"javax.ws.rs.Produces","QueryParam":"javax.ws.rs.QueryParam","Response":"javax.ws.rs.core.Response","UriInfo":"javax.ws.rs.core.UriInfo","WebApplicationException":"javax.ws.rs.WebApplicationException","WebTarget":"javax.ws.rs.cl)jdk"
    R"jdk(ient.WebTarget"}},{"links":["https://docs.oracle.com/javase/8/docs/api/"],"methods":{"HttpServletRequest":["getParameter","getReader","getInputStream","getSession","getHeader"],"HttpServletResponse":["setContentType","getWriter","setStatus","getOutputStream","setCharacterEncoding"]},"modules":["javax.servlet"],"name":"javax.servlet","packages":["javax.servlet"],"types":{"HttpServlet":"javax.servlet.http.HttpServlet","HttpServletRequest":"javax.servlet.http.HttpServletRequest","HttpServletResponse":"javax.servlet.http.HttpServletResponse","HttpSession":"javax.servlet.http.HttpSession","ServletException":"javax.servlet.ServletException","ServletOutputStream":"javax.servlet.ServletOutputStream"}},{"links":["https://docs.oracle.com/javase/8/docs/api/"],"methods":{"JAXBContext":["newInstance","createMarshaller","createUnmarshaller"],"Marshaller":["marshal","setProperty"],"Unmarshaller":["unmarshal"]},"modules":["javax.xml"],"name":"javax.xml","packages":["javax.xml"],"types":{"DocumentBuilder":"javax.xml.parsers.DocumentBuilder","DocumentBuilderFactory":"javax.xml.parsers.DocumentBuilderFactory","JAXBContext":"javax.xml.bind.JAXBContext","JAXBException":"javax.xml.bind.JAXBException","Marshaller":"javax.xml.bind.Marshaller","Unmarshaller":"javax.xml.bind.Unmarshaller","XmlAttribute":"javax.xml.bind.annotation.XmlAttribute","XmlElement":"javax.xml.bind.annotation.XmlElement","XmlRootElement":"javax.xml.bind.annotation.XmlRootElement"}}])jdk"
    ;

}  // namespace

ApiDb ApiDb::builtin_jdk() { return parse(kJdkApis); }

}  // namespace scenariodoc
