public interface DataSource {
    void write(String chunk);
}
