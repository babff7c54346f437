public class VlcAdapter implements MediaPlayer {
    VlcEngine engine;

    public VlcAdapter() {
        engine = new VlcEngine();
    }

    public void play(String file) {
        System.out.println("dropped " + file);
    }
}
