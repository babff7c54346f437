public class VlcAdapter implements MediaPlayer {
    VlcEngine engine;

    public VlcAdapter() {
        engine = new VlcEngine();
    }

    public void play(String file) {
        engine.playVlc(file);
    }
}
