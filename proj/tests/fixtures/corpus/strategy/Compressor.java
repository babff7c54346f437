public class Compressor {
    CompressionStrategy strategy;

    public void setStrategy(CompressionStrategy next) {
        strategy = next;
    }

    public void compress(String path) {
        strategy.compress(path);
    }
}
