public class FastCompressor extends Compressor {
    public FastCompressor() {
        strategy = new Zip();
    }
}
