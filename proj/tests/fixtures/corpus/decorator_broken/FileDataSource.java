public class FileDataSource implements DataSource {
    public void write(String chunk) {
        System.out.println("file <- " + chunk);
    }
}
